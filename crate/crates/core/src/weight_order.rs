//! The dominance (Bruhat–Chevalley) order on weights: `λ ≤ μ` iff `μ − λ`
//! is a non-negative integer combination of simple roots.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::root_system::{RootDatum, Weight};

/// The cone of dominant integral weights of a datum.
pub struct DominantCone<'a> {
    datum: &'a RootDatum,
}

impl<'a> DominantCone<'a> {
    pub fn new(datum: &'a RootDatum) -> Self {
        DominantCone { datum }
    }

    pub fn contains(&self, w: &Weight) -> bool {
        debug_assert_eq!(w.rank(), self.datum.rank());
        w.is_dominant()
    }
}

/// `λ ≤ μ` in the dominance order on weights.
pub fn leq_root_order(datum: &RootDatum, lambda: &Weight, mu: &Weight) -> Result<bool> {
    let diff = mu.checked_sub(lambda)?;
    let scaled = datum.root_coords_scaled_raw(&diff.0)?;
    let den = datum.root_basis_den();
    Ok(scaled.iter().all(|&c| c >= 0 && c % den == 0))
}

/// Whether `λ` lies in the root lattice `Q`.
pub fn in_root_lattice(datum: &RootDatum, lambda: &Weight) -> Result<bool> {
    let scaled = datum.root_coords_scaled_raw(&lambda.0)?;
    let den = datum.root_basis_den();
    Ok(scaled.iter().all(|&c| c % den == 0))
}

/// All dominant integral weights `λ ≤ μ`, in lexicographic coordinate
/// order. Breadth-first subtraction of simple roots from `μ` with a
/// visited set; a dominant weight has non-negative root coordinates, so
/// the search is pruned to the box `0 ≤ c ≤ ⌊μ⌋_root`.
pub fn enumerate_dominant_below(datum: &RootDatum, mu: &Weight) -> Result<Vec<Weight>> {
    if !mu.is_dominant() {
        return Err(Error::NonDominantInput(format!(
            "enumeration bound {mu} is not dominant"
        )));
    }
    let rank = datum.rank();
    let den = datum.root_basis_den();
    let mu_root = datum.root_coords_scaled_raw(&mu.0)?;
    let bound: Vec<i64> = mu_root.iter().map(|&c| c / den).collect();

    let cap = datum.limits().max_lattice_points;
    let alphas: Vec<Vec<i64>> = (0..rank).map(|i| datum.simple_root_fund(i)).collect();

    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue: VecDeque<(Vec<i64>, Vec<i64>)> = VecDeque::new();
    let mut result: Vec<Weight> = Vec::new();

    let start = (mu.0.clone(), vec![0i64; rank]);
    seen.insert(start.0.clone());
    queue.push_back(start);

    while let Some((coords, counts)) = queue.pop_front() {
        if seen.len() > cap {
            return Err(Error::ResourceLimit(format!(
                "dominant enumeration below {mu} exceeds {cap} lattice points"
            )));
        }
        if coords.iter().all(|&c| c >= 0) {
            result.push(Weight(coords.clone()));
        }
        for i in 0..rank {
            if counts[i] + 1 > bound[i] {
                continue;
            }
            let mut next = coords.clone();
            let mut overflow = false;
            for (k, alpha_k) in alphas[i].iter().enumerate() {
                match next[k].checked_sub(*alpha_k) {
                    Some(v) => next[k] = v,
                    None => {
                        overflow = true;
                        break;
                    }
                }
            }
            if overflow {
                return Err(Error::Overflow);
            }
            if seen.insert(next.clone()) {
                let mut counts2 = counts.clone();
                counts2[i] += 1;
                queue.push_back((next, counts2));
            }
        }
    }

    result.sort();
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::build_root_datum;

    fn datum(s: &str) -> RootDatum {
        build_root_datum(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn leq_examples() {
        let a2 = datum("A2");
        // 2ρ − ρ = ρ = α_1 + α_2.
        assert!(leq_root_order(&a2, &Weight(vec![1, 1]), &Weight(vec![2, 2])).unwrap());
        // Reflexivity.
        assert!(leq_root_order(&a2, &Weight(vec![1, 1]), &Weight(vec![1, 1])).unwrap());
        // [2,2] − [1,0] is not in the root lattice.
        assert!(!leq_root_order(&a2, &Weight(vec![1, 0]), &Weight(vec![2, 2])).unwrap());
    }

    #[test]
    fn root_lattice_examples() {
        let a2 = datum("A2");
        assert!(in_root_lattice(&a2, &Weight::zero(2)).unwrap());
        assert!(in_root_lattice(&a2, &Weight(vec![1, 1])).unwrap());
        assert!(!in_root_lattice(&a2, &Weight(vec![1, 0])).unwrap());

        let a1 = datum("A1");
        assert!(!in_root_lattice(&a1, &Weight(vec![1])).unwrap());
    }

    #[test]
    fn enumerate_below_2rho_a1() {
        let a1 = datum("A1");
        let found = enumerate_dominant_below(&a1, &Weight(vec![2])).unwrap();
        assert_eq!(found, vec![Weight(vec![0]), Weight(vec![2])]);
    }

    #[test]
    fn enumerate_below_2rho_a2() {
        let a2 = datum("A2");
        let found = enumerate_dominant_below(&a2, &Weight(vec![2, 2])).unwrap();
        let expected = vec![
            Weight(vec![0, 0]),
            Weight(vec![0, 3]),
            Weight(vec![1, 1]),
            Weight(vec![2, 2]),
            Weight(vec![3, 0]),
        ];
        assert_eq!(found, expected);
    }

    #[test]
    fn enumerate_below_zero() {
        let b2 = datum("B2");
        let found = enumerate_dominant_below(&b2, &Weight::zero(2)).unwrap();
        assert_eq!(found, vec![Weight::zero(2)]);
    }

    #[test]
    fn enumerated_weights_lie_below_bound() {
        for s in ["A3", "B2", "G2"] {
            let d = datum(s);
            let two_rho = d.rho().checked_scale(2).unwrap();
            let all = enumerate_dominant_below(&d, &two_rho).unwrap();
            assert!(all.contains(&Weight::zero(d.rank())));
            assert!(all.contains(&two_rho));
            for w in &all {
                assert!(w.is_dominant());
                assert!(leq_root_order(&d, w, &two_rho).unwrap());
            }
        }
    }
}
