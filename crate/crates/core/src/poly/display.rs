use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed};

use super::zpoly::{Monomial, Var, NVARS};

pub const DEFAULT_NAMES: [&str; NVARS] = ["t", "s", "x", "y", "z", "mu"];

/// Variable names used when printing; lets the parameter appear under its input name.
pub type Names<'a> = [&'a str; NVARS];

pub(crate) fn write_terms<'a, I>(f: &mut dyn fmt::Write, terms: I, names: &Names<'_>) -> fmt::Result
where
    I: Iterator<Item = (&'a Monomial, BigRational)>,
{
    let mut first = true;
    for (m, c) in terms {
        let neg = c.is_negative();
        let a = c.abs();
        if first {
            if neg {
                f.write_str("-")?;
            }
        } else {
            f.write_str(if neg { " - " } else { " + " })?;
        }
        first = false;
        let mut factors: Vec<String> = Vec::new();
        if !a.is_one() || m.is_one() {
            factors.push(a.to_string());
        }
        for v in Var::ALL.iter().rev() {
            let e = m.get(*v);
            match e {
                0 => {}
                1 => factors.push(names[v.index()].to_string()),
                _ => factors.push(format!("{}^{}", names[v.index()], e)),
            }
        }
        f.write_str(&factors.join("*"))?;
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}
