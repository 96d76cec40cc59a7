//! The permutation-window model for built-in type A data.
//!
//! An element of `W_e` for `GL_n` is an `n`-periodic permutation of the
//! integers, recorded by its window `w(1) ... w(n)`; `SL_n` windows are the
//! same data modulo adding `n` to every entry.

use std::collections::HashMap;
use std::sync::Arc;

use crate::root::{Coord, Family, RootDatum, Weight};
use crate::weyl::GroupElement;
use crate::Error;

/// The window `w(1) ... w(n)` of a type A element.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypeAWindow {
    entries: Vec<Coord>,
}

impl TypeAWindow {
    /// Validates the two window conditions: entries distinct mod `n` and
    /// entry sum congruent to `1 + ... + n` mod `n`.
    pub fn new(entries: Vec<Coord>) -> Result<TypeAWindow, Error> {
        let n = entries.len() as Coord;
        if n == 0 {
            return Err(Error::NotTypeA);
        }
        let mut residues: Vec<Coord> = entries.iter().map(|e| e.rem_euclid(n)).collect();
        residues.sort_unstable();
        residues.dedup();
        if residues.len() != entries.len() {
            return Err(Error::NotTypeA);
        }
        let shift: Coord = entries.iter().enumerate().map(|(i, e)| e - (i as Coord + 1)).sum();
        if shift.rem_euclid(n) != 0 {
            return Err(Error::NotTypeA);
        }
        Ok(TypeAWindow { entries })
    }

    pub fn entries(&self) -> &[Coord] {
        &self.entries
    }

    /// The periodic extension `w(i + n) = w(i) + n`.
    pub fn entry(&self, i: Coord) -> Coord {
        let n = self.entries.len() as Coord;
        let r = (i - 1).rem_euclid(n) + 1;
        self.entries[(r - 1) as usize] + (i - r)
    }

    /// `w s_i > w` iff `w(i) < w(i+1)`; `i` may be any generator index.
    pub fn right_ascent(&self, i: usize) -> bool {
        self.entry(i as Coord) < self.entry(i as Coord + 1)
    }

    /// Window equality modulo the global shift by `n` (the `SL_n` rule).
    pub fn eq_mod_shift(&self, other: &TypeAWindow) -> bool {
        if self.entries.len() != other.entries.len() {
            return false;
        }
        let n = self.entries.len() as Coord;
        let d = other.entries[0] - self.entries[0];
        d % n == 0
            && self
                .entries
                .iter()
                .zip(other.entries.iter())
                .all(|(a, b)| b - a == d)
    }
}

impl std::fmt::Debug for TypeAWindow {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self}")
    }
}

impl std::fmt::Display for TypeAWindow {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        write!(f, "[{}]", cells.join(","))
    }
}

/// Marker vectors `n e^vee_j - (e^vee_1 + ... + e^vee_n)` in simple-coroot
/// coordinates; the finite Weyl group permutes them like the indices.
fn sl_markers(n: usize) -> Vec<Vec<Coord>> {
    (1..=n)
        .map(|j| {
            (1..n)
                .map(|m| if j <= m { n as Coord - m as Coord } else { -(m as Coord) })
                .collect()
        })
        .collect()
}

/// One-line permutation of the finite part of `g`.
fn finite_permutation(g: &GroupElement) -> Vec<usize> {
    let datum = g.datum();
    let fin = g.finite_part();
    match datum.family() {
        Family::Gl(n) => {
            // Column j of the weight matrix has its 1 in row u(j).
            let mut perm = vec![0usize; *n];
            for j in 1..=*n {
                let mut basis = vec![0; *n];
                basis[j - 1] = 1;
                let image = fin.act_on_weight(&Weight::new(datum.clone(), basis));
                let row = image
                    .coords()
                    .iter()
                    .position(|&c| c == 1)
                    .expect("permutation matrix");
                perm[j - 1] = row + 1;
            }
            perm
        }
        Family::Sl(n) => {
            // u(F_j) = F_{u(j)} for the marker covectors.
            let markers = sl_markers(*n);
            let index: HashMap<Vec<Coord>, usize> =
                markers.iter().cloned().zip(1..=*n).collect();
            (1..=*n)
                .map(|j| {
                    let image = fin.covector_action(&markers[j - 1]);
                    *index.get(&image).expect("markers are permuted")
                })
                .collect()
        }
        Family::Generic => unreachable!("caller checks type A"),
    }
}

/// The window of a type A element.
pub fn window_of(g: &GroupElement) -> Result<TypeAWindow, Error> {
    let datum = g.datum();
    let n = datum.window_size().ok_or(Error::NotTypeA)? as Coord;
    if datum.rank() == 0 {
        // GL_1: y^k has window [k+1]; SL_1 only the identity.
        let entries = match datum.family() {
            Family::Gl(1) => vec![g.translation_part().coords()[0] + 1],
            _ => vec![1],
        };
        return Ok(TypeAWindow { entries });
    }
    let perm = finite_permutation(g);
    let lam = g.translation_part();
    let lam_eps: Vec<Coord> = match datum.family() {
        Family::Gl(_) => lam.coords().to_vec(),
        Family::Sl(nn) => {
            // Canonical lift: the representative whose coordinate sum lies
            // in [0, n), which is the one reached by pi^k for the
            // normalized exponent k.
            let c = lam.coords();
            let mut lift: Vec<Coord> = (1..=*nn).map(|j| c.iter().skip(j - 1).sum()).collect();
            let shift = lift.iter().sum::<Coord>().div_euclid(n);
            for e in &mut lift {
                *e -= shift;
            }
            lift
        }
        Family::Generic => unreachable!(),
    };
    let entries = (1..=n as usize)
        .map(|i| {
            let u_i = perm[i - 1] as Coord;
            u_i + n * lam_eps[perm[i - 1] - 1]
        })
        .collect();
    Ok(TypeAWindow { entries })
}

/// The element with a given window.
pub fn element_of(datum: &Arc<RootDatum>, window: &TypeAWindow) -> Result<GroupElement, Error> {
    let n = datum.window_size().ok_or(Error::NotTypeA)?;
    if window.entries.len() != n {
        return Err(Error::NotTypeA);
    }
    if datum.rank() == 0 {
        return match datum.family() {
            Family::Gl(1) => Ok(GroupElement::translation(&Weight::new(
                datum.clone(),
                vec![window.entries[0] - 1],
            ))),
            _ => Ok(GroupElement::identity(datum)),
        };
    }
    let nc = n as Coord;
    let mut perm = vec![0usize; n];
    let mut lam_eps = vec![0 as Coord; n];
    for i in 1..=n {
        let w = window.entries[i - 1];
        let r = (w - 1).rem_euclid(nc) + 1;
        perm[i - 1] = r as usize;
        lam_eps[(r - 1) as usize] = (w - r) / nc;
    }
    let trans = match datum.family() {
        Family::Gl(_) => lam_eps.clone(),
        Family::Sl(_) => (1..n).map(|t| lam_eps[t - 1] - lam_eps[t]).collect(),
        Family::Generic => unreachable!(),
    };
    let fin = permutation_element(datum, &perm);
    Ok(GroupElement::translation(&Weight::new(datum.clone(), trans)).multiply(&fin))
}

/// Builds the finite Weyl element with a given one-line notation, by
/// sorting with adjacent transpositions.
pub fn permutation_element(datum: &Arc<RootDatum>, perm: &[usize]) -> GroupElement {
    let mut p = perm.to_vec();
    let mut letters = Vec::new();
    loop {
        let mut done = true;
        for i in 0..p.len().saturating_sub(1) {
            if p[i] > p[i + 1] {
                p.swap(i, i + 1);
                letters.push(i + 1);
                done = false;
            }
        }
        if done {
            break;
        }
    }
    let mut g = GroupElement::identity(datum);
    for &l in letters.iter().rev() {
        g = g.multiply(&GroupElement::simple(datum, l));
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn window_validation() {
        assert!(TypeAWindow::new(vec![1, 2, 3, 4]).is_ok());
        assert!(TypeAWindow::new(vec![5, 2, 4, 7]).is_ok());
        // repeated residue mod 4
        assert!(TypeAWindow::new(vec![1, 5, 3, 4]).is_err());
        assert!(TypeAWindow::new(vec![-27, -13, 4, 16, 35]).is_ok());
    }

    #[test]
    fn windows_of_generators() {
        let datum = crate::root::RootDatum::sl(4);
        let e = GroupElement::identity(&datum);
        assert_eq!(window_of(&e).unwrap().entries(), &[1, 2, 3, 4]);
        let pi = GroupElement::pi(&datum, 1).unwrap();
        assert_eq!(window_of(&pi).unwrap().entries(), &[2, 3, 4, 5]);
        assert_eq!(
            window_of(&pi.power(2)).unwrap().entries(),
            &[3, 4, 5, 6]
        );
        let s0 = GroupElement::simple(&datum, 0);
        assert_eq!(window_of(&s0).unwrap().entries(), &[0, 2, 3, 5]);
        // paper example: pi^2 s_2 s_0 s_1 has window 5 2 4 7
        let g = pi
            .power(2)
            .multiply(&GroupElement::simple(&datum, 2))
            .multiply(&GroupElement::simple(&datum, 0))
            .multiply(&GroupElement::simple(&datum, 1));
        assert_eq!(window_of(&g).unwrap().entries(), &[5, 2, 4, 7]);
        assert_eq!(g.length(), 3);
        // pi s_0 has window 1 3 4 6
        let h = pi.multiply(&s0);
        assert_eq!(window_of(&h).unwrap().entries(), &[1, 3, 4, 6]);
    }

    #[test]
    fn round_trips() {
        let sl4 = crate::root::RootDatum::sl(4);
        for g in crate::weyl::elements_up_to_length(&sl4, 3) {
            let w = window_of(&g).unwrap();
            assert_eq!(element_of(&sl4, &w).unwrap(), g);
        }
        // shifted window lands on the same SL element
        let w = TypeAWindow::new(vec![5, 6, 7, 8]).unwrap();
        assert!(element_of(&sl4, &w).unwrap().is_identity());
        assert!(w.eq_mod_shift(&TypeAWindow::new(vec![1, 2, 3, 4]).unwrap()));

        let gl3 = crate::root::RootDatum::gl(3);
        for g in crate::weyl::elements_up_to_length(&gl3, 3) {
            let w = window_of(&g).unwrap();
            assert_eq!(element_of(&gl3, &w).unwrap(), g);
        }
        // GL window with a global shift is a different element
        let w = TypeAWindow::new(vec![4, 5, 6]).unwrap();
        let g = element_of(&gl3, &w).unwrap();
        assert!(!g.is_identity());
        assert!(g.is_translation());
    }

    #[test]
    fn right_ascents_match_descents() {
        let datum = crate::root::RootDatum::sl(3);
        for g in crate::weyl::elements_up_to_length(&datum, 4) {
            let w = window_of(&g).unwrap();
            for i in datum.generator_indices() {
                assert_eq!(w.right_ascent(i), !g.right_descent(i), "i={i} w={w}");
            }
        }
    }
}
