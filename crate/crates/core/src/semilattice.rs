//! The free semilattice of finite point sets and its isomorphism with the
//! band of idempotents, `e ↦ λ \ dom e`.

use crate::element::PartialSelfmap;
use crate::error::{Error, Result};
use crate::finset::FinSet;

pub fn join(a: &FinSet, b: &FinSet) -> FinSet {
    a.join(b)
}

pub fn to_idempotent(a: &FinSet) -> PartialSelfmap {
    PartialSelfmap::idempotent(a)
}

pub fn from_idempotent(e: &PartialSelfmap) -> Result<FinSet> {
    require_idempotent(e)?;
    Ok(e.holes())
}

fn require_idempotent(e: &PartialSelfmap) -> Result<()> {
    if e.is_idempotent() {
        Ok(())
    } else {
        Err(Error::NotIdempotent(e.to_string()))
    }
}

/// All `x` with `a ∪ x = b`: empty unless `a ⊆ b`, otherwise every `x` with
/// `b \ a ⊆ x ⊆ b`. There are `2^|a|` of them.
pub fn f_solver(a: &FinSet, b: &FinSet) -> Vec<FinSet> {
    if !a.is_subset(b) {
        return Vec::new();
    }
    let forced = b.difference(a);
    let mut out: Vec<FinSet> = a.subsets().iter().map(|s| forced.join(s)).collect();
    out.sort();
    out
}

/// All idempotents above `e`; there are `2^corank(e)`.
pub fn up_set(e: &PartialSelfmap) -> Result<Vec<PartialSelfmap>> {
    let holes = from_idempotent(e)?;
    Ok(holes
        .subsets()
        .iter()
        .map(PartialSelfmap::idempotent)
        .collect())
}

/// The maximal chain `e = e_k < … < e_0 = id`, dropping the largest
/// remaining hole at each step.
pub fn maximal_chain_up(e: &PartialSelfmap) -> Result<Vec<PartialSelfmap>> {
    let mut holes = from_idempotent(e)?;
    let mut chain = vec![e.clone()];
    while let Some(x) = holes.last() {
        holes.remove(x);
        chain.push(PartialSelfmap::idempotent(&holes));
    }
    Ok(chain)
}

/// Idempotents below `e` whose extra holes all lie in `window`.
pub fn down_set_in_window(e: &PartialSelfmap, window: &FinSet) -> Result<Vec<PartialSelfmap>> {
    let holes = from_idempotent(e)?;
    let free = window.difference(&holes);
    Ok(free
        .subsets()
        .iter()
        .map(|s| PartialSelfmap::idempotent(&holes.join(s)))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(s: &str) -> PartialSelfmap {
        s.parse().unwrap()
    }

    fn fs<const N: usize>(xs: [u64; N]) -> FinSet {
        FinSet::from(xs)
    }

    #[test]
    fn join_examples() {
        assert_eq!(join(&fs([1]), &fs([2])), fs([1, 2]));
        let a = fs([3, 5]);
        assert_eq!(join(&a, &FinSet::new()), a);
        assert_eq!(join(&a, &a), a);
    }

    #[test]
    fn idempotent_isomorphism_examples() {
        assert_eq!(to_idempotent(&fs([3])), el("{-3}"));
        assert_eq!(
            from_idempotent(&PartialSelfmap::identity()).unwrap(),
            FinSet::new()
        );
        let (a, b) = (fs([1, 4]), fs([2, 4]));
        assert_eq!(
            to_idempotent(&join(&a, &b)),
            to_idempotent(&a).compose(&to_idempotent(&b))
        );
        assert!(matches!(
            from_idempotent(&el("{1>2,2>1}")),
            Err(Error::NotIdempotent(_))
        ));
    }

    #[test]
    fn f_solver_examples() {
        assert_eq!(f_solver(&fs([1]), &fs([1, 2])), vec![fs([1, 2]), fs([2])]);
        assert!(f_solver(&fs([1, 2]), &fs([1])).is_empty());
        assert_eq!(
            f_solver(&FinSet::new(), &FinSet::new()),
            vec![FinSet::new()]
        );
    }

    #[test]
    fn up_set_example() {
        let mut up = up_set(&el("{-1,-2}")).unwrap();
        up.sort();
        let mut expected = vec![
            PartialSelfmap::identity(),
            el("{-1}"),
            el("{-2}"),
            el("{-1,-2}"),
        ];
        expected.sort();
        assert_eq!(up, expected);
    }

    #[test]
    fn chain_example() {
        assert_eq!(
            maximal_chain_up(&el("{-1,-2}")).unwrap(),
            vec![el("{-1,-2}"), el("{-1}"), PartialSelfmap::identity()]
        );
        assert_eq!(
            maximal_chain_up(&PartialSelfmap::identity()).unwrap(),
            vec![PartialSelfmap::identity()]
        );
    }

    #[test]
    fn down_set_example() {
        let mut down = down_set_in_window(&PartialSelfmap::identity(), &fs([1])).unwrap();
        down.sort();
        assert_eq!(down, vec![PartialSelfmap::identity(), el("{-1}")]);
        assert_eq!(
            down_set_in_window(&el("{-1}"), &fs([1, 2])).unwrap().len(),
            2
        );
    }
}
