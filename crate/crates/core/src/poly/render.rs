use num_traits::{One, Signed, Zero};

use crate::exactnum::Rational;

/// Ordering of terms in the human-readable form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TermOrder {
    Ascending,
    Descending,
}

/// One monomial: coefficient and `(variable, exponent)` factors.
pub(crate) type Term<'a> = (Rational, Vec<(&'a str, usize)>);

fn monomial(coeff: &Rational, vars: &[(&str, usize)]) -> String {
    let mut parts = Vec::new();
    let bare = vars.iter().all(|&(_, e)| e == 0);
    if bare || !coeff.is_one() {
        parts.push(coeff.to_string());
    }
    for &(v, e) in vars {
        match e {
            0 => {}
            1 => parts.push(v.to_string()),
            _ => parts.push(format!("{v}^{e}")),
        }
    }
    parts.join("*")
}

/// Joins terms as `a + b - c`, dropping zero coefficients.
pub(crate) fn join_terms<'a>(terms: impl IntoIterator<Item = Term<'a>>) -> String {
    let mut out = String::new();
    for (c, vars) in terms {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let body = monomial(&c.abs(), &vars);
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
