use std::fmt;

use crate::error::{Error, Result};
use crate::lattice::{GridDims, Signature};
use crate::weights::Orientation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Forward,
    Inverse,
}

/// One switch operator: forward or inverse, horizontal or vertical, acting
/// on the lines `index` and `index + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct OperatorSymbol {
    pub orientation: Orientation,
    pub index: u32,
    pub direction: Direction,
}

impl OperatorSymbol {
    pub fn forward(orientation: Orientation, index: u32) -> OperatorSymbol {
        OperatorSymbol {
            orientation,
            index,
            direction: Direction::Forward,
        }
    }

    pub fn inverse(orientation: Orientation, index: u32) -> OperatorSymbol {
        OperatorSymbol {
            orientation,
            index,
            direction: Direction::Inverse,
        }
    }

    pub fn inverted(self) -> OperatorSymbol {
        OperatorSymbol {
            direction: match self.direction {
                Direction::Forward => Direction::Inverse,
                Direction::Inverse => Direction::Forward,
            },
            ..self
        }
    }
}

impl fmt::Display for OperatorSymbol {
    /// `d3H` for the forward horizontal operator on rows 3, 4; `D3H` for its inverse.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = match self.direction {
            Direction::Forward => 'd',
            Direction::Inverse => 'D',
        };
        write!(f, "{d}{}{}", self.index, self.orientation.letter().to_ascii_uppercase())
    }
}

/// A product of switch operators as written: the rightmost symbol is
/// applied first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct OperatorWord(pub Vec<OperatorSymbol>);

impl OperatorWord {
    /// Builds a word from symbols listed in the order they are applied.
    pub fn from_applications(mut symbols: Vec<OperatorSymbol>) -> OperatorWord {
        symbols.reverse();
        OperatorWord(symbols)
    }

    /// Symbols in the order they act.
    pub fn applications(&self) -> impl Iterator<Item = OperatorSymbol> + '_ {
        self.0.iter().rev().copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Concatenation as written, so `other` acts first.
    pub fn compose(&self, other: &OperatorWord) -> OperatorWord {
        OperatorWord(self.0.iter().chain(other.0.iter()).copied().collect())
    }

    pub fn inverse(&self) -> OperatorWord {
        OperatorWord(self.0.iter().rev().map(|s| s.inverted()).collect())
    }

    /// Tracks `(alpha, beta)` through the word; forward and inverse
    /// operators act the same way on signatures.
    pub fn transport(&self, alpha: &Signature, beta: &Signature) -> (Signature, Signature) {
        let (mut a, mut b) = (alpha.clone(), beta.clone());
        for s in self.applications() {
            match s.orientation {
                Orientation::Horizontal => a = s_on_signature(&a, s.index),
                Orientation::Vertical => b = s_on_signature(&b, s.index),
            }
        }
        (a, b)
    }
}

impl fmt::Display for OperatorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|s| s.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// The simple transposition `s_i` acting on the positions of a signature:
/// exactly one of `i`, `i + 1` present means that part moves to the other.
pub fn s_on_signature(alpha: &Signature, i: u32) -> Signature {
    let mut set = alpha.to_set();
    match (set.contains(&i), set.contains(&(i + 1))) {
        (true, false) => {
            set.remove(&i);
            set.insert(i + 1);
        }
        (false, true) => {
            set.remove(&(i + 1));
            set.insert(i);
        }
        _ => {}
    }
    Signature::from_set(&set).expect("a set of positive integers is a signature")
}

fn check_signature(sig: &Signature, max: usize, what: &'static str) -> Result<()> {
    match sig.largest() {
        Some(p) if p as usize > max => Err(Error::OutOfRange {
            what,
            value: p as usize,
            max,
        }),
        _ => Ok(()),
    }
}

/// Horizontal operators moving exits from the top-dense rows `{1..d}` to
/// `alpha`: the lowest base row goes to the largest part first, one step
/// at a time, then the next.
pub fn horizontal_transport_word(alpha: &Signature) -> OperatorWord {
    let d = alpha.len() as u32;
    let mut apps = Vec::new();
    for (k, &target) in alpha.parts().iter().enumerate() {
        let start = d - k as u32;
        apps.extend((start..target).map(|i| OperatorSymbol::forward(Orientation::Horizontal, i)));
    }
    OperatorWord::from_applications(apps)
}

/// Vertical operators moving entries from the right-dense columns
/// `{m-d+1..m}` to `beta`: the leftmost base column goes to the smallest part
/// first, one step to the left at a time.
pub fn vertical_transport_word(beta: &Signature, cols: u32) -> OperatorWord {
    let d = beta.len() as u32;
    let mut apps = Vec::new();
    for (k, &target) in beta.parts().iter().rev().enumerate() {
        let start = cols - d + 1 + k as u32;
        apps.extend((target..start).rev().map(|j| OperatorSymbol::forward(Orientation::Vertical, j)));
    }
    OperatorWord::from_applications(apps)
}

/// The interval composition `d[1,alpha_d] d[2,alpha_(d-1)] .. d[d,alpha_1]` with
/// `d[i,j] = d(j-1) d(j-2) .. d(i)`, written out literally.
pub fn horizontal_literal_word(alpha: &Signature) -> OperatorWord {
    let d = alpha.len();
    let mut written = Vec::new();
    for i in 1..=d {
        let j = alpha.parts()[d - i];
        for l in (i as u32..j).rev() {
            written.push(OperatorSymbol::forward(Orientation::Horizontal, l));
        }
    }
    OperatorWord(written)
}

/// The double product `prod_(k=1..d) prod_(l=beta_k..M-k) d(l)`, written out
/// literally.
pub fn vertical_literal_word(beta: &Signature, cols: u32) -> OperatorWord {
    let mut written = Vec::new();
    for (k, &b) in beta.parts().iter().enumerate() {
        let hi = cols - (k as u32 + 1);
        for l in b..=hi {
            written.push(OperatorSymbol::forward(Orientation::Vertical, l));
        }
    }
    OperatorWord(written)
}

/// Which construction to use for the operator word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum WordForm {
    /// Move one part at a time, outermost first.
    #[default]
    Transport,
    /// The displayed product formulas, expanded verbatim.
    Literal,
}

/// The word `d_alpha^H d_beta^V` taking the base case to `(alpha, beta)`.
pub fn word_for_signatures(alpha: &Signature, beta: &Signature, dims: GridDims, form: WordForm) -> Result<OperatorWord> {
    check_signature(alpha, dims.rows, "right signature part")?;
    check_signature(beta, dims.cols, "top signature part")?;
    if alpha.len() != beta.len() {
        return Err(Error::Invalid(format!(
            "signatures {alpha} and {beta} must have the same length"
        )));
    }
    if alpha.len() > dims.rows.min(dims.cols) {
        return Err(Error::OutOfRange {
            what: "signature length",
            value: alpha.len(),
            max: dims.rows.min(dims.cols),
        });
    }
    let cols = dims.cols as u32;
    let (h, v) = match form {
        WordForm::Transport => (horizontal_transport_word(alpha), vertical_transport_word(beta, cols)),
        WordForm::Literal => (horizontal_literal_word(alpha), vertical_literal_word(beta, cols)),
    };
    Ok(h.compose(&v))
}

/// Base signatures for `d` paths: exits on rows `{1..d}`, entries on columns `{m-d+1..m}`.
pub fn base_signatures(d: usize, cols: usize) -> (Signature, Signature) {
    let alpha = Signature::delta(d as u32);
    let beta = Signature::new(((cols - d + 1) as u32..=cols as u32).rev().collect()).expect("strict");
    (alpha, beta)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(p: &[u32]) -> Signature {
        Signature::new(p.to_vec()).unwrap()
    }

    fn apps(w: &OperatorWord) -> Vec<u32> {
        w.applications().map(|s| s.index).collect()
    }

    #[test]
    fn s_examples() {
        assert_eq!(s_on_signature(&sig(&[3, 2, 1]), 3), sig(&[4, 2, 1]));
        assert_eq!(s_on_signature(&sig(&[5, 3, 1]), 1), sig(&[5, 3, 2]));
        assert_eq!(s_on_signature(&sig(&[3, 2]), 2), sig(&[3, 2]));
        assert_eq!(s_on_signature(&sig(&[5]), 2), sig(&[5]));
    }

    #[test]
    fn chain_from_the_text() {
        let mut a = sig(&[3, 2, 1]);
        let mut seen = vec![a.clone()];
        for i in [3, 4, 2, 1] {
            a = s_on_signature(&a, i);
            seen.push(a.clone());
        }
        let expect = [&[3, 2, 1][..], &[4, 2, 1], &[5, 2, 1], &[5, 3, 1], &[5, 3, 2]];
        assert_eq!(seen, expect.iter().map(|p| sig(p)).collect::<Vec<_>>());
    }

    #[test]
    fn words_for_the_five_by_five_instance() {
        let dims = GridDims::new(5, 5).unwrap();
        let h = horizontal_transport_word(&sig(&[5, 3, 2]));
        assert_eq!(apps(&h), vec![3, 4, 2, 1]);
        let v = vertical_transport_word(&sig(&[4, 2, 1]), 5);
        assert_eq!(apps(&v), vec![2, 1, 3, 2, 4]);
        assert_eq!(v.to_string(), "d4V d2V d3V d1V d2V");
        let w = word_for_signatures(&sig(&[5, 3, 2]), &sig(&[4, 2, 1]), dims, WordForm::Transport).unwrap();
        let (a0, b0) = base_signatures(3, 5);
        assert_eq!(w.transport(&a0, &b0), (sig(&[5, 3, 2]), sig(&[4, 2, 1])));
        let lit = word_for_signatures(&sig(&[5, 3, 2]), &sig(&[4, 2, 1]), dims, WordForm::Literal).unwrap();
        assert_eq!(lit, w);
    }

    #[test]
    fn printed_horizontal_word_reaches_a_different_signature() {
        // d1 d3 d2 d4 d3, rightmost first
        let w = OperatorWord([1, 3, 2, 4, 3].iter().map(|&i| OperatorSymbol::forward(Orientation::Horizontal, i)).collect());
        let (a, _) = w.transport(&sig(&[3, 2, 1]), &Signature::default());
        assert_eq!(a, sig(&[5, 4, 2]));
    }

    #[test]
    fn base_gives_empty_word() {
        let dims = GridDims::new(4, 6).unwrap();
        let (a, b) = base_signatures(2, 6);
        assert_eq!(b, sig(&[6, 5]));
        assert!(word_for_signatures(&a, &b, dims, WordForm::Transport).unwrap().is_empty());
    }

    #[test]
    fn forms_agree_and_transport_everywhere() {
        for n in 1..=5usize {
            let dims = GridDims::new(n, n).unwrap();
            for d in 0..=n {
                let (a0, b0) = base_signatures(d, n);
                for alpha in Signature::all(d, n as u32) {
                    for beta in Signature::all(d, n as u32) {
                        let w = word_for_signatures(&alpha, &beta, dims, WordForm::Transport).unwrap();
                        let l = word_for_signatures(&alpha, &beta, dims, WordForm::Literal).unwrap();
                        assert_eq!(w, l);
                        assert_eq!(w.transport(&a0, &b0), (alpha.clone(), beta.clone()));
                    }
                }
            }
        }
    }

    #[test]
    fn rejects_bad_input() {
        let dims = GridDims::new(3, 3).unwrap();
        assert!(word_for_signatures(&sig(&[4]), &sig(&[1]), dims, WordForm::Transport).is_err());
        assert!(word_for_signatures(&sig(&[2]), &sig(&[2, 1]), dims, WordForm::Transport).is_err());
    }
}
