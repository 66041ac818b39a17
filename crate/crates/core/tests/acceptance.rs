//! End-to-end acceptance run. Prints one line per criterion and exits
//! nonzero if any criterion fails or exceeds its time budget.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use vertexkit::algebra::x;
use vertexkit::lattice::{enumerate_states, state_vertex_kinds, Model, VertexKind};
use vertexkit::partition::Engine;
use vertexkit::schur::{classical_schur, factor_dwbc, PartitionShape};
use vertexkit::verify::{run_suite, Suite, SuiteReport, VerifyOptions};
use vertexkit::weights::ff_scheme;

const BUDGET: Duration = Duration::from_secs(60);
const SEED: u64 = 20_240_601;

type Verdict = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn suite(s: Suite) -> Result<SuiteReport, String> {
    let report = run_suite(s, &VerifyOptions { seed: SEED, ..Default::default() }).map_err(|e| e.to_string())?;
    if let Some(f) = report.failures().next() {
        return Err(format!("{} failed: {}", f.name, f.to_json()));
    }
    Ok(report)
}

fn min_checks(report: &SuiteReport, filter: impl Fn(&str) -> bool) -> usize {
    report.cases.iter().filter(|c| filter(&c.name)).map(|c| c.checks).min().unwrap_or(0)
}

/// Alternating sign matrices of size `n`, counted row by row over partial
/// column sums. Independent of the lattice code.
fn count_asm(n: usize) -> u64 {
    fn rows(n: usize, sums: &[i32], acc: &mut Vec<i32>, out: &mut Vec<Vec<i32>>) {
        let k = acc.len();
        if k == n {
            let nonzero: Vec<i32> = acc.iter().copied().filter(|&v| v != 0).collect();
            let alternates = nonzero.first() == Some(&1)
                && nonzero.last() == Some(&1)
                && nonzero.windows(2).all(|w| w[0] != w[1]);
            if alternates && sums.iter().zip(acc.iter()).all(|(s, v)| (0..=1).contains(&(s + v))) {
                out.push(acc.clone());
            }
            return;
        }
        for v in [-1, 0, 1] {
            acc.push(v);
            rows(n, sums, acc, out);
            acc.pop();
        }
    }
    fn go(n: usize, row: usize, sums: Vec<i32>) -> u64 {
        if row == n {
            return sums.iter().all(|&s| s == 1) as u64;
        }
        let mut next = Vec::new();
        rows(n, &sums, &mut Vec::new(), &mut next);
        next.into_iter()
            .map(|r| go(n, row + 1, sums.iter().zip(&r).map(|(s, v)| s + v).collect()))
            .sum()
    }
    go(n, 0, vec![0; n])
}

/// Weight grids of the seven 3x3 states, as listed in the reference text.
fn reference_state_grids() -> Result<Vec<Vec<Vec<String>>>, String> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../paper.md");
    let text = std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
    ensure(text.contains("there are seven admissible configurations"), "reference text does not state seven states")?;
    let end = text.find(r"\label{fig:states}").ok_or("figure label not found")?;
    let start = text[..end].rfind(r"\begin{figure}").ok_or("figure start not found")?;
    let fig = &text[start..end];
    let mut grids = Vec::new();
    for block in fig.split(r"\begin{aligned}[c]").skip(1) {
        let body = block.split(r"\end{aligned}").next().unwrap_or("");
        let mut grid = Vec::new();
        for line in body.split(r"\\").map(str::trim).filter(|l| !l.is_empty()) {
            let mut row = Vec::new();
            let mut rest = line;
            while let Some(u) = rest.find('_') {
                let name = format!("{}{}", &rest[u - 1..u], &rest[u + 1..u + 2]);
                let close = rest[u..].find(')').ok_or("unterminated weight")? + u;
                let pos: Vec<usize> = rest[u + 3..close].split(',').map(|s| s.trim().parse().unwrap_or(0)).collect();
                ensure(pos == vec![grid.len() + 1, row.len() + 1], format!("weight at unexpected position {pos:?}"))?;
                row.push(name);
                rest = &rest[close + 1..];
            }
            grid.push(row);
        }
        grids.push(grid);
    }
    Ok(grids)
}

fn criterion_1() -> Verdict {
    let expected = [1u64, 2, 7, 42];
    for (n, &want) in (1..=4).zip(&expected) {
        let got = enumerate_states(&Model::dwbc(n).map_err(|e| e.to_string())?).count() as u64;
        ensure(got == want && count_asm(n) == want, format!("n={n}: enumerated {got}, oracle {}, expected {want}", count_asm(n)))?;
    }
    let listed = reference_state_grids()?;
    ensure(listed.len() == 7, format!("reference listing has {} states", listed.len()))?;
    let listed: BTreeSet<_> = listed.into_iter().collect();
    let enumerated: BTreeSet<Vec<Vec<String>>> = enumerate_states(&Model::dwbc(3).unwrap())
        .map(|s| {
            state_vertex_kinds(&s)
                .into_iter()
                .map(|row| row.into_iter().map(|k: VertexKind| k.to_string()).collect())
                .collect()
        })
        .collect();
    ensure(listed == enumerated, "vertex-kind grids differ from the reference listing")?;
    Ok("counts 1, 2, 7, 42; all 7 grids match the reference listing".into())
}

fn criterion_2() -> Verdict {
    let r = suite(Suite::Ybe)?;
    let cases: Vec<_> = r.cases.iter().filter(|c| c.name.contains("nullity")).collect();
    let rows = cases.iter().filter(|c| c.name.starts_with("rows")).count();
    let cols = cases.iter().filter(|c| c.name.starts_with("cols")).count();
    ensure(rows == 4 && cols == 4, format!("{rows} row pairs, {cols} column pairs"))?;
    ensure(min_checks(&r, |n| n.contains("nullity")) >= 20, "fewer than 20 points")?;
    Ok(format!("{} adjacent pairs on 5x5, nullity 1 and 64 zero residuals at 20 points", cases.len()))
}

fn criterion_3() -> Verdict {
    let r = suite(Suite::Ybe)?;
    let n = r.cases.iter().filter(|c| c.name.starts_with("relations")).count();
    ensure(n == 8, format!("{n} relation cases"))?;
    ensure(min_checks(&r, |s| s.starts_with("relations")) >= 20, "fewer than 20 points")?;
    Ok(format!("{n} pairs, weight relations and quadratic relation exact at every point"))
}

fn sweep_covers(r: &SuiteReport, kinds: &[&str]) -> Result<(), String> {
    for n in 2..=4 {
        for k in kinds {
            let hits = r.cases.iter().filter(|c| c.name.starts_with(&format!("n={n} ")) && c.name.contains(k)).count();
            ensure(hits > 0, format!("no case for n={n} {k}"))?;
        }
    }
    ensure(min_checks(r, |_| true) >= 10, "fewer than 10 points per case")
}

fn criterion_4() -> Verdict {
    let r = suite(Suite::Train)?;
    sweep_covers(&r, &["rows(", "cols(", "(0,0)", "(0,1)", "(1,0)", "(1,1)"])?;
    Ok(format!("{} cases, n = 2..4, rows and columns, 4 occupancies, 10 points", r.cases.len()))
}

fn criterion_5() -> Verdict {
    let r = suite(Suite::Exchange)?;
    sweep_covers(&r, &[" h ", " v ", "BothIn", "BothOut", "LowerOnly", "UpperOnly"])?;
    Ok(format!("{} cases, all four identities in both orientations", r.cases.len()))
}

fn criterion_6() -> Verdict {
    let r = suite(Suite::Inverse)?;
    ensure(r.cases.iter().any(|c| c.name.contains("H d1H")), "no horizontal case")?;
    ensure(r.cases.iter().any(|c| c.name.contains("V d1V")), "no vertical case")?;
    ensure(min_checks(&r, |_| true) >= 20, "fewer than 20 points")?;
    Ok(format!("{} words, both orders and orientations, 20 points", r.cases.len()))
}

fn criterion_7() -> Verdict {
    let r = suite(Suite::Theorem)?;
    // strict signature pairs of equal length d <= 2 inside 4x4
    let choose = |n: usize, k: usize| (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1));
    let expected: usize = (0..=2).map(|d| choose(4, d) * choose(4, d)).sum();
    let small = r.cases.iter().filter(|c| c.name.starts_with("4x4")).count();
    ensure(small == expected, format!("{small} 4x4 cases, expected {expected}"))?;
    ensure(
        r.cases.iter().any(|c| c.name.contains("5x5") && c.name.contains("(5,3,2)") && c.name.contains("(4,2,1)")),
        "5x5 instance missing",
    )?;
    ensure(min_checks(&r, |_| true) >= 5, "fewer than 5 points")?;
    Ok(format!("{expected} pairs on 4x4 plus (5,3,2)/(4,2,1) on 5x5, 5 points each"))
}

fn criterion_8() -> Verdict {
    suite(Suite::Factorization)?;
    for n in 2..=3 {
        let (z, first) = factor_dwbc(n, &ff_scheme(), Engine::Dp).map_err(|e| e.to_string())?;
        let (_, second) = factor_dwbc(n, &ff_scheme(), Engine::Brute).map_err(|e| e.to_string())?;
        ensure(first.is_complete(), format!("n={n}: cofactor {}", first.cofactor))?;
        ensure(first.to_json() == second.to_json(), format!("n={n}: report not stable"))?;
        let mut rebuilt = first.cofactor.clone();
        for (f, k) in &first.factors {
            rebuilt = &rebuilt * &f.pow(*k);
        }
        ensure(rebuilt == z, format!("n={n}: factors do not multiply back to Z"))?;
    }
    Ok("n = 2, 3 split completely into binomials; reports identical across engines".into())
}

fn criterion_9() -> Verdict {
    let r = suite(Suite::Proposition)?;
    for want in ["n=2 m=3 alpha=(3,1)", "n=2 m=4 alpha=(4,2)", "n=3 m=4 alpha=(4,2,1)"] {
        ensure(r.cases.iter().any(|c| c.name == want), format!("missing {want}"))?;
    }
    ensure(min_checks(&r, |_| true) >= 10, "fewer than 10 points")?;
    Ok("3 instances, 10 points each".into())
}

fn criterion_10() -> Verdict {
    let r = suite(Suite::Symmetry)?;
    ensure(r.cases.len() >= 20, format!("{} configurations", r.cases.len()))?;
    Ok(format!("{} configurations with both columns beyond the top signature", r.cases.len()))
}

fn criterion_11() -> Verdict {
    let r = suite(Suite::Engines)?;
    ensure(r.cases.iter().any(|c| c.name.starts_with("50 random") && c.checks >= 50), "fewer than 50 models")?;
    ensure(r.cases.iter().any(|c| c.name.contains("symbolic") && c.checks >= 3), "DWBC n <= 3 missing")?;
    Ok("50 random models at points, DWBC n = 1..3 symbolic".into())
}

fn criterion_12() -> Verdict {
    suite(Suite::SchurCalibration)?;
    // s_(2,1)(x1, x2, x3) = sum over i != j of x_i^2 x_j, plus 2 x1 x2 x3
    let mut expected = &(&x(1) * &x(2)) * &x(3);
    expected = &expected + &expected;
    for i in 1..=3 {
        for j in 1..=3 {
            if i != j {
                expected = &expected + &(&x(i).pow(2) * &x(j));
            }
        }
    }
    let s = classical_schur(&PartitionShape::new(vec![2, 1]).unwrap(), 3).map_err(|e| e.to_string())?;
    ensure(s == expected, format!("classical s_(2,1) = {s}"))?;
    Ok("unique convention equals the pinned one; pinned assertions, symmetry, a = 0 reduction pass".into())
}

fn main() {
    let criteria: [fn() -> Verdict; 12] = [
        criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7, criterion_8,
        criterion_9, criterion_10, criterion_11, criterion_12,
    ];
    let mut failed = 0;
    for (i, check) in criteria.iter().enumerate() {
        let start = Instant::now();
        let verdict = check();
        let took = start.elapsed();
        let verdict = match verdict {
            Ok(msg) if took > BUDGET => Err(format!("{msg}, but took longer than {}s", BUDGET.as_secs())),
            v => v,
        };
        match verdict {
            Ok(msg) => println!("criterion {}: PASS ({msg}) [{:.1}s]", i + 1, took.as_secs_f64()),
            Err(msg) => {
                failed += 1;
                println!("criterion {}: FAIL ({msg}) [{:.1}s]", i + 1, took.as_secs_f64());
            }
        }
    }
    println!("{} of 12 criteria passed", 12 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
