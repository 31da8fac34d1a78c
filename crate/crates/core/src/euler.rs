//! Total turning of canonical chord representatives.
//!
//! With the `2n` points placed at angles `j·π/n` and every chord meeting the
//! boundary at right angles, a straight chord from `a` to `b` turns through
//! `θ_b − θ_a − π`, reduced into the open interval `(−π, π)`. All angles here
//! are integers in units of `π/n`.

use crate::error::{Error, Result};
use crate::marking::{Marking, Matching};

/// Turning of the straight chord `a → b` in units of `π/n`, in `(−n, n)`.
pub fn chord_turning(marking: &Marking, a: usize, b: usize) -> i64 {
    let n = marking.n() as i64;
    let raw = b as i64 - a as i64 - n;
    // reduce into (-n, n]; the value n itself would need a == b
    let r = (raw + n).rem_euclid(2 * n) - n;
    debug_assert!(r != -n && r != n, "chord endpoints coincide");
    r
}

/// Sum of chord turnings of the matching, in units of `π/n`.
pub fn turning_units(sigma: &Matching) -> i64 {
    sigma.chords().map(|(a, b)| chord_turning(sigma.marking(), a, b)).sum()
}

/// Generalised Euler class of the straight-chord representative: total
/// turning divided by `π`.
pub fn base_euler(sigma: &Matching) -> Result<i64> {
    let n = sigma.marking().n() as i64;
    let units = turning_units(sigma);
    if units % n != 0 {
        return Err(Error::NonIntegralTurning);
    }
    Ok(units / n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::marking::enumerate_matchings;
    use std::sync::Arc;

    fn f(n: usize) -> Arc<Marking> {
        Arc::new(Marking::alternating(n).unwrap())
    }

    #[test]
    fn examples() {
        let f1 = f(1);
        assert_eq!(base_euler(&Matching::new(f1, vec![1]).unwrap()), Ok(0));
        let f2 = f(2);
        assert_eq!(base_euler(&Matching::new(f2.clone(), vec![1, 3]).unwrap()), Ok(-1));
        assert_eq!(base_euler(&Matching::new(f2, vec![3, 1]).unwrap()), Ok(1));
        let f3 = f(3);
        assert_eq!(base_euler(&Matching::new(f3, vec![3, 5, 1]).unwrap()), Ok(0));
    }

    #[test]
    fn turning_stays_in_open_interval() {
        for n in 1..=5 {
            let mk = f(n);
            for a in 0..2 * n {
                for b in 0..2 * n {
                    if a != b {
                        let t = chord_turning(&mk, a, b);
                        assert!(t.abs() < n as i64);
                    }
                }
            }
        }
    }

    #[test]
    fn parity_is_n_minus_one() {
        for n in 1..=6 {
            let mk = f(n);
            for s in enumerate_matchings(&mk) {
                let e = base_euler(&s).unwrap();
                assert_eq!(e.rem_euclid(2), (n as i64 - 1).rem_euclid(2), "{s}");
            }
        }
    }

    #[test]
    fn non_integral_turning_is_reported() {
        let mk = Arc::new("iioioo".parse::<Marking>().unwrap());
        let any_bad = enumerate_matchings(&mk).iter().any(|s| base_euler(s).is_err());
        assert!(any_bad);
    }
}
