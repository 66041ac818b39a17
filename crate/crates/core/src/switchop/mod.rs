//! Switch operators: divided-difference style operators built from cross
//! weights that move boundary paths one line at a time.

mod exchange;
mod operator;
mod word;

pub use exchange::{exchange_check_at, identity_residual_at, ExchangeCase, ExchangeReport};
pub use operator::{
    base_case, operator_kinds, operator_pair, reduce_to_base_at, reduce_to_base_symbolic, SwitchContext,
};
pub use word::*;

#[cfg(test)]
mod tests;
