//! Dropping superfluous critical values by recomputing on sheared copies.

use rand::Rng;

use crate::critical::critical_set;
use crate::error::Result;
use crate::family::{draw_mu, shear, ParametrizedFamily};
use crate::realroots::RootSet;

#[derive(Clone, Debug)]
pub struct Reduction {
    pub set: RootSet,
    /// The `mu0` used in each round.
    pub shears: Vec<num_rational::BigRational>,
}

/// Intersects `a` with the critical set of `rounds` randomly sheared copies of `fam`.
pub fn reduce_critical_set<R: Rng>(
    fam: &ParametrizedFamily,
    a: &RootSet,
    rounds: usize,
    rng: &mut R,
) -> Result<Reduction> {
    let mut set = a.clone();
    let mut shears = Vec::new();
    for _ in 0..rounds {
        if set.is_empty() {
            break;
        }
        let mu0 = draw_mu(rng);
        let sheared = shear(fam, &mu0)?;
        let other = critical_set(&sheared, rng)?;
        set = set.intersect(&other.set);
        shears.push(mu0);
    }
    Ok(Reduction { set, shears })
}
