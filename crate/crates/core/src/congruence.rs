//! The congruence chain of the monoid, permutation parity, and canonical
//! class labels for the quotients.
//!
//! The chain, from coarsest to finest, is
//! `omega = I:0 ⊇ S:0 ⊇ A:0 ⊇ I:1 ⊇ S:1 ⊇ A:1 ⊇ I:2 ⊇ … ⊇ delta`, where
//!
//! * `I:n` collapses the ideal of elements of corank `>= n`;
//! * `S:n` additionally collapses each `H`-class of corank exactly `n`, and
//!   collapses everything of corank `> n`;
//! * `A:n` is like `S:n` but splits each such `H`-class into its two parity
//!   cosets.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use serde::Serialize;

use crate::element::{PartialSelfmap, Point};
use crate::error::{Error, Result};
use crate::finset::FinSet;
use crate::green::h_related;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Mul for Parity {
    type Output = Parity;

    fn mul(self, rhs: Parity) -> Parity {
        if self == rhs {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// Parity of the permutation an element induces on its own domain.
///
/// Computed from the cycle decomposition of the moved part: even iff the
/// sum of `(cycle length - 1)` is even.
pub fn sign(s: &PartialSelfmap) -> Result<Parity> {
    if !s.is_permutation_of_domain() {
        return Err(Error::NotPermutation(s.to_string()));
    }
    let mut seen = BTreeSet::new();
    let mut transpositions = 0usize;
    for (start, _) in s.moved() {
        if seen.contains(&start) {
            continue;
        }
        let mut len = 0usize;
        let mut x = start;
        loop {
            seen.insert(x);
            len += 1;
            x = s.apply(x).expect("permutation of its domain");
            if x == start {
                break;
            }
        }
        transpositions += len - 1;
    }
    Ok(if transpositions.is_multiple_of(2) {
        Parity::Even
    } else {
        Parity::Odd
    })
}

/// A member of the congruence chain. `omega` is stored as `I(0)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CongruenceId {
    Delta,
    I(usize),
    S(usize),
    A(usize),
}

impl CongruenceId {
    pub const OMEGA: CongruenceId = CongruenceId::I(0);

    /// Position in the chain; smaller is coarser, `None` stands for the
    /// identity congruence at the bottom.
    pub fn index(self) -> Option<usize> {
        match self {
            Self::Delta => None,
            Self::I(n) => Some(3 * n),
            Self::S(n) => Some(3 * n + 1),
            Self::A(n) => Some(3 * n + 2),
        }
    }

    /// Inverse of [`index`](Self::index).
    pub fn from_index(idx: Option<usize>) -> Self {
        match idx {
            None => Self::Delta,
            Some(i) => match i % 3 {
                0 => Self::I(i / 3),
                1 => Self::S(i / 3),
                _ => Self::A(i / 3),
            },
        }
    }

    /// Every member with level at most `max_n`, coarsest first, then `delta`.
    pub fn family(max_n: usize) -> Vec<CongruenceId> {
        (0..3 * (max_n + 1))
            .map(|i| Self::from_index(Some(i)))
            .chain([Self::Delta])
            .collect()
    }

    fn cmp_fineness(self, other: Self) -> Ordering {
        // finer first: Delta is the finest
        match (self.index(), other.index()) {
            (None, None) => Ordering::Equal,
            (None, Some(_)) => Ordering::Less,
            (Some(_), None) => Ordering::Greater,
            (Some(a), Some(b)) => b.cmp(&a),
        }
    }

    /// `self ⊆ other` as relations.
    pub fn leq(self, other: Self) -> bool {
        self.cmp_fineness(other) != Ordering::Greater
    }

    pub fn meet(self, other: Self) -> Self {
        if self.leq(other) {
            self
        } else {
            other
        }
    }

    pub fn join(self, other: Self) -> Self {
        if self.leq(other) {
            other
        } else {
            self
        }
    }

    pub fn related(self, a: &PartialSelfmap, b: &PartialSelfmap) -> bool {
        if a == b {
            return true;
        }
        let (ra, rb) = (a.corank(), b.corank());
        match self {
            Self::Delta => false,
            Self::I(n) => ra >= n && rb >= n,
            Self::S(n) => (ra > n && rb > n) || (ra == n && h_related(a, b)),
            Self::A(n) => {
                (ra > n && rb > n)
                    || (ra == n && h_related(a, b) && quotient_parity(a, b) == Parity::Even)
            }
        }
    }

    pub fn class_label(self, a: &PartialSelfmap) -> ClassLabel {
        let r = a.corank();
        let singleton = || ClassLabel::Singleton(a.clone());
        match self {
            Self::Delta => singleton(),
            Self::I(n) => {
                if r >= n {
                    ClassLabel::Zero
                } else {
                    singleton()
                }
            }
            Self::S(n) | Self::A(n) => match r.cmp(&n) {
                Ordering::Greater => ClassLabel::Zero,
                Ordering::Less => singleton(),
                Ordering::Equal => {
                    let dom_c = a.holes();
                    let ran_c = a.range_complement();
                    if let Self::S(_) = self {
                        ClassLabel::HClass { dom_c, ran_c }
                    } else {
                        let rho = h_class_reference(&dom_c, &ran_c);
                        let parity = quotient_parity(a, &rho);
                        ClassLabel::HCoset {
                            dom_c,
                            ran_c,
                            parity,
                        }
                    }
                }
            },
        }
    }
}

/// Parity of `a b⁻¹` for `H`-related `a`, `b`; it permutes `dom a`.
fn quotient_parity(a: &PartialSelfmap, b: &PartialSelfmap) -> Parity {
    sign(&a.compose(&b.inverse())).expect("H-related elements give a permutation")
}

impl PartialOrd for CongruenceId {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Ordered by inclusion: `a < b` iff `a` is strictly finer.
impl Ord for CongruenceId {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_fineness(*other)
    }
}

impl fmt::Display for CongruenceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Delta => f.write_str("delta"),
            Self::I(0) => f.write_str("omega"),
            Self::I(n) => write!(f, "I:{n}"),
            Self::S(n) => write!(f, "S:{n}"),
            Self::A(n) => write!(f, "A:{n}"),
        }
    }
}

impl FromStr for CongruenceId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Syntax {
            pos: 0,
            msg: format!("expected delta, omega, I:<n>, S:<n> or A:<n>, got `{s}`"),
        };
        match s.trim() {
            "delta" => return Ok(Self::Delta),
            "omega" => return Ok(Self::OMEGA),
            _ => {}
        }
        let (tag, n) = s.trim().split_once(':').ok_or_else(bad)?;
        let n: usize = n.trim().parse().map_err(|_| bad())?;
        match tag.trim() {
            "I" => Ok(Self::I(n)),
            "S" => Ok(Self::S(n)),
            "A" => Ok(Self::A(n)),
            _ => Err(bad()),
        }
    }
}

impl Serialize for CongruenceId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Smallest member of the chain relating `a` and `b`.
pub fn principal_congruence(a: &PartialSelfmap, b: &PartialSelfmap) -> CongruenceId {
    if a == b {
        return CongruenceId::Delta;
    }
    let m = a.corank().min(b.corank());
    if !h_related(a, b) {
        return CongruenceId::I(m);
    }
    match quotient_parity(a, b) {
        Parity::Odd => CongruenceId::S(m),
        Parity::Even => CongruenceId::A(m),
    }
}

/// Canonical name of a congruence class.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ClassLabel {
    Singleton(PartialSelfmap),
    Zero,
    /// A whole `H`-class, named by its domain and range complements.
    HClass {
        dom_c: FinSet,
        ran_c: FinSet,
    },
    /// A parity coset of an `H`-class, measured against
    /// [`h_class_reference`].
    HCoset {
        dom_c: FinSet,
        ran_c: FinSet,
        parity: Parity,
    },
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Singleton(a) => write!(f, "[{a}]"),
            Self::Zero => f.write_str("zero"),
            Self::HClass { dom_c, ran_c } => write!(f, "H(dom^c={dom_c}, ran^c={ran_c})"),
            Self::HCoset {
                dom_c,
                ran_c,
                parity,
            } => write!(f, "H(dom^c={dom_c}, ran^c={ran_c}) {parity}"),
        }
    }
}

/// The order-preserving representative of the `H`-class with the given
/// domain and range complements.
///
/// With `m` one past the largest listed point, it maps `[0, m) \ dom_c` onto
/// `[0, m) \ ran_c` in increasing order and fixes everything from `m` on.
pub fn h_class_reference(dom_c: &FinSet, ran_c: &FinSet) -> PartialSelfmap {
    let m: Point = dom_c.last().max(ran_c.last()).map_or(0, |x| x + 1);
    let sources: Vec<Point> = (0..m).filter(|p| !dom_c.contains(*p)).collect();
    let targets: Vec<Point> = (0..m).filter(|p| !ran_c.contains(*p)).collect();
    assert_eq!(
        sources.len(),
        targets.len(),
        "complements of different sizes"
    );
    PartialSelfmap::make(sources.into_iter().zip(targets), dom_c.iter())
        .expect("reference element is a valid bijection")
}

#[cfg(test)]
mod tests {
    use super::*;
    use CongruenceId::*;

    fn el(s: &str) -> PartialSelfmap {
        s.parse().unwrap()
    }

    fn id() -> PartialSelfmap {
        PartialSelfmap::identity()
    }

    #[test]
    fn sign_examples() {
        assert_eq!(sign(&id()).unwrap(), Parity::Even);
        assert_eq!(sign(&el("{1>2,2>1}")).unwrap(), Parity::Odd);
        assert_eq!(sign(&el("{1>2,2>3,3>1}")).unwrap(), Parity::Even);
        assert_eq!(sign(&el("{1>2,2>1,3>4,4>3,-7}")).unwrap(), Parity::Even);
        assert!(matches!(
            sign(&el("{1>3,-3}")),
            Err(Error::NotPermutation(_))
        ));
    }

    #[test]
    fn related_examples() {
        assert!(I(1).related(&el("{-1}"), &el("{-2}")));
        let t = el("{1>2,2>1}");
        assert!(!A(0).related(&id(), &t));
        assert!(S(0).related(&id(), &t));
        assert!(A(0).related(&id(), &el("{1>2,2>3,3>1}")));
        assert!(Delta.related(&t, &t));
        assert!(!Delta.related(&id(), &t));
        assert!(CongruenceId::OMEGA.related(&id(), &el("{-1,-2}")));
    }

    #[test]
    fn principal_examples() {
        assert_eq!(principal_congruence(&id(), &el("{1>2,2>1}")), S(0));
        assert_eq!(principal_congruence(&id(), &el("{1>2,2>3,3>1}")), A(0));
        assert_eq!(principal_congruence(&el("{-1}"), &el("{-2}")), I(1));
        assert_eq!(principal_congruence(&id(), &el("{-2}")), I(0));
        assert_eq!(principal_congruence(&el("{-2}"), &el("{-2}")), Delta);
    }

    #[test]
    fn label_examples() {
        let t = el("{1>2,2>1}");
        let units = ClassLabel::HClass {
            dom_c: FinSet::new(),
            ran_c: FinSet::new(),
        };
        assert_eq!(S(0).class_label(&t), units);
        assert_eq!(S(0).class_label(&id()), units);
        let odd = A(0).class_label(&t);
        let even = A(0).class_label(&id());
        assert!(matches!(
            odd,
            ClassLabel::HCoset {
                parity: Parity::Odd,
                ..
            }
        ));
        assert!(matches!(
            even,
            ClassLabel::HCoset {
                parity: Parity::Even,
                ..
            }
        ));
        assert_ne!(odd, even);
        assert_eq!(
            I(2).class_label(&el("{-1}")),
            ClassLabel::Singleton(el("{-1}"))
        );
        assert_eq!(
            CongruenceId::OMEGA.class_label(&el("{-1}")),
            ClassLabel::Zero
        );
    }

    #[test]
    fn reference_element_lies_in_its_class() {
        let a = el("{1>3, 4>1, -3}");
        let rho = h_class_reference(&a.holes(), &a.range_complement());
        assert!(h_related(&a, &rho));
        assert_eq!(rho, el("{4>3, -3}"));
    }

    #[test]
    fn chain_order() {
        assert!(A(0).leq(S(0)));
        assert!(I(1).leq(A(0)));
        assert!(!S(0).leq(A(0)));
        assert!(Delta.leq(I(7)));
        assert_eq!(Delta.join(CongruenceId::OMEGA), CongruenceId::OMEGA);
        assert_eq!(Delta.meet(CongruenceId::OMEGA), Delta);
        assert_eq!(S(2).meet(I(2)), S(2));
        let fam = CongruenceId::family(2);
        assert_eq!(fam.len(), 10);
        for w in fam.windows(2) {
            assert!(w[1] < w[0]);
        }
    }

    #[test]
    fn text_syntax() {
        for c in CongruenceId::family(3) {
            assert_eq!(c.to_string().parse::<CongruenceId>().unwrap(), c);
        }
        assert_eq!("I:0".parse::<CongruenceId>().unwrap(), CongruenceId::OMEGA);
        assert_eq!(CongruenceId::OMEGA.to_string(), "omega");
        assert!("X:1".parse::<CongruenceId>().is_err());
        assert!("S:".parse::<CongruenceId>().is_err());
    }
}
