//! Finite models for brute-force verification.
//!
//! The elements supported inside a finite window `W` form a subsemigroup
//! isomorphic to the symmetric inverse monoid on `W`. Every classification
//! claim in this crate is checked exhaustively (or by seeded sampling) on
//! such models.

mod check;
mod suites;

use std::collections::HashMap;

use crate::element::{PartialSelfmap, Point};
use crate::error::{Error, Result};
use crate::finset::FinSet;
use crate::solver::for_each_partial_injection;

pub use check::{CheckResult, Report, Suite, VerifyConfig};
pub use suites::verify;

/// Default bound on window size for enumeration.
pub const DEFAULT_WINDOW_BOUND: usize = 6;

/// Default bound on window size for verification. The pair tables of a
/// size-6 window hold about 1.8e8 entries each.
pub const VERIFY_WINDOW_BOUND: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Window {
    points: FinSet,
}

impl Window {
    pub fn new(points: FinSet) -> Self {
        Window { points }
    }

    /// The window `{0, …, n-1}`.
    pub fn first(n: usize) -> Self {
        Window::new((0..n as Point).collect())
    }

    pub fn points(&self) -> &FinSet {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// `k` points above everything in the window.
    pub fn fresh_points(&self, k: usize) -> Vec<Point> {
        let start = self.points.last().map_or(0, |m| m + 1);
        (start..start + k as Point).collect()
    }
}

/// Every element supported in `window`, one per partial injection of the
/// window into itself.
pub fn enumerate_window(window: &Window) -> Result<Vec<PartialSelfmap>> {
    enumerate_window_bounded(window, DEFAULT_WINDOW_BOUND)
}

pub fn enumerate_window_bounded(window: &Window, bound: usize) -> Result<Vec<PartialSelfmap>> {
    if window.len() > bound {
        return Err(Error::WindowTooLarge {
            size: window.len(),
            bound,
        });
    }
    let pts: Vec<Point> = window.points.iter().collect();
    let mut out = Vec::new();
    for_each_partial_injection(&pts, &pts, &mut |choice: &[Option<Point>]| {
        let el = PartialSelfmap::from_local(pts.iter().copied(), |p| {
            let i = pts.iter().position(|&q| q == p).expect("window point");
            choice[i]
        })
        .expect("partial injection of the window");
        out.push(el);
    });
    Ok(out)
}

/// A window's elements with their multiplication and inversion tables.
#[derive(Debug, Clone)]
pub struct Model {
    window: Window,
    elements: Vec<PartialSelfmap>,
    index: HashMap<PartialSelfmap, usize>,
    mul: Vec<u32>,
    inv: Vec<u32>,
}

impl Model {
    pub fn new(window: &Window, bound: usize) -> Result<Self> {
        let elements = enumerate_window_bounded(window, bound)?;
        let index: HashMap<PartialSelfmap, usize> = elements
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, e)| (e, i))
            .collect();
        let n = elements.len();
        let lookup = |e: &PartialSelfmap| {
            *index
                .get(e)
                .unwrap_or_else(|| panic!("window not closed: {e} escapes")) as u32
        };
        let mut mul = Vec::with_capacity(n * n);
        for a in &elements {
            for b in &elements {
                mul.push(lookup(&a.compose(b)));
            }
        }
        let inv = elements.iter().map(|a| lookup(&a.inverse())).collect();
        Ok(Model {
            window: window.clone(),
            elements,
            index,
            mul,
            inv,
        })
    }

    pub fn window(&self) -> &Window {
        &self.window
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[PartialSelfmap] {
        &self.elements
    }

    pub fn get(&self, i: usize) -> &PartialSelfmap {
        &self.elements[i]
    }

    pub fn index_of(&self, a: &PartialSelfmap) -> Option<usize> {
        self.index.get(a).copied()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.len() + b] as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_counts() {
        let expected = [1usize, 2, 7, 34, 209, 1546];
        for (n, &count) in expected.iter().enumerate() {
            assert_eq!(
                enumerate_window(&Window::first(n)).unwrap().len(),
                count,
                "|W| = {n}"
            );
        }
    }

    #[test]
    fn singleton_window() {
        let els = enumerate_window(&Window::new(FinSet::from([5]))).unwrap();
        assert!(els.contains(&PartialSelfmap::identity()));
        assert!(els.contains(&PartialSelfmap::idempotent(&FinSet::from([5]))));
        assert_eq!(els.len(), 2);
    }

    #[test]
    fn window_bound_is_enforced() {
        assert_eq!(
            enumerate_window(&Window::first(7)),
            Err(Error::WindowTooLarge { size: 7, bound: 6 })
        );
    }

    #[test]
    fn model_tables() {
        let m = Model::new(&Window::first(2), 6).unwrap();
        assert_eq!(m.len(), 7);
        for a in 0..m.len() {
            assert_eq!(m.mul(m.mul(a, m.inv(a)), a), a);
        }
    }
}
