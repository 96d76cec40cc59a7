//! Primitive elements and the lowest two-sided cell.
//!
//! A `w` in `W_e` is primitive when `w^{-1}(A_0)` stays inside the box
//! `B_0`, equivalently when every `w(alpha_i)` for finite `i` lies in
//! `(R_- + delta) /\ R_+`, equivalently when `w = v y^lambda w_0` with
//! `lambda` read off the right descent set of `v`. Primitive elements
//! biject with the finite Weyl group, and every element of the lowest
//! two-sided cell factors uniquely as `v_1 . w_0 y^lambda . v_2` with
//! `v_1, v_2^{-1}` primitive.

use std::sync::Arc;

use crate::root::{AffineRoot, Coord, RootDatum, Weight};
use crate::weyl::{finite_weyl_group, longest_finite, GroupElement, Side};
use crate::window::{window_of, TypeAWindow};
use crate::Error;

/// Which of the equivalent characterizations produced a certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Criterion {
    Geometric,
    Root,
    Factored,
    Word,
}

/// A primitive element with the data of the factored criterion:
/// `w = v . y^lambda . w_0` where `lambda` is the sum of the fundamental
/// weights away from the right descent set `J` of `v`.
#[derive(Debug, Clone)]
pub struct PrimitiveCertificate {
    pub w: GroupElement,
    pub v: GroupElement,
    pub j: Vec<usize>,
    pub lambda: Weight,
    pub criterion_used: Criterion,
}

fn require_simply_connected(datum: &RootDatum) -> Result<(), Error> {
    if datum.is_simply_connected() {
        Ok(())
    } else {
        Err(Error::NotSimplyConnected)
    }
}

/// The root criterion: `w(alpha_i)` lies in `(R_- + delta) u R_+` for every
/// finite simple root.
pub fn is_primitive(w: &GroupElement) -> Result<bool, Error> {
    require_simply_connected(w.datum())?;
    let datum = w.datum();
    Ok(datum.finite_indices().all(|i| {
        let image = w.act_on_root(&AffineRoot::simple(datum, i));
        let sign = datum
            .coroot_sign(image.beta())
            .expect("image of a coroot is a coroot");
        match image.delta_coefficient() {
            0 => sign,
            1 => !sign,
            _ => false,
        }
    }))
}

/// The type A word criterion: all consecutive window differences lie in
/// `[1, n]`.
pub fn is_primitive_word(window: &TypeAWindow) -> bool {
    let n = window.entries().len() as Coord;
    window
        .entries()
        .windows(2)
        .all(|p| (1..=n).contains(&(p[1] - p[0])))
}

/// The geometric criterion: `w^{-1}(A_0)` is contained in the box `B_0`.
pub fn is_primitive_geometric(w: &GroupElement) -> Result<bool, Error> {
    require_simply_connected(w.datum())?;
    Ok(box_of(&w.inverse()).is_zero())
}

/// The box `B_lambda` containing `w(A_0)`, computed by exact floors of the
/// simple-coroot pairings at an interior rational point of the alcove
/// image. For simply connected data the result is the unique such `lambda`.
pub fn box_of(w: &GroupElement) -> Weight {
    let datum = w.datum();
    let q = w.act_on_level_point(&datum.alcove_point());
    let coords: Vec<Coord> = datum
        .finite_indices()
        .map(|i| {
            // <q, alpha'^vee_i> in the datum's coordinates
            let pairing = match datum.window_size() {
                Some(_) if !datum.is_simply_connected() => q[i - 1] - q[i],
                _ => q[i - 1],
            };
            assert!(!pairing.is_integer(), "alcove interior avoids all walls");
            pairing.floor().to_integer()
        })
        .collect();
    match datum.window_size() {
        // GL: realize the floor vector as an honest weight with last
        // coordinate zero.
        Some(n) if !datum.is_simply_connected() => {
            let mut eps = vec![0; n];
            for j in (0..n - 1).rev() {
                eps[j] = eps[j + 1] + coords[j];
            }
            Weight::new(datum.clone(), eps)
        }
        _ => Weight::new(datum.clone(), coords),
    }
}

/// The bijection `W_f -> primitive elements`: `J = R(v)`,
/// `lambda = sum of fundamental weights off J`, `w = v y^lambda w_0`.
pub fn primitive_from_finite(v: &GroupElement) -> Result<PrimitiveCertificate, Error> {
    require_simply_connected(v.datum())?;
    assert!(v.is_finite(), "primitive_from_finite needs v in W_f");
    let datum = v.datum().clone();
    let j: Vec<usize> = datum
        .finite_indices()
        .filter(|&i| v.right_descent(i))
        .collect();
    let mut lambda = Weight::zero(datum.clone());
    for i in datum.finite_indices() {
        if !j.contains(&i) {
            lambda = lambda.add(&Weight::fundamental(datum.clone(), i));
        }
    }
    let w = v
        .multiply(&GroupElement::translation(&lambda))
        .multiply(&longest_finite(&datum));
    debug_assert_eq!(is_primitive(&w), Ok(true));
    Ok(PrimitiveCertificate {
        w,
        v: v.clone(),
        j,
        lambda,
        criterion_used: Criterion::Factored,
    })
}

/// Inverse of [`primitive_from_finite`]: recovers `v` from a primitive `w`.
pub fn finite_from_primitive(w: &GroupElement) -> Result<PrimitiveCertificate, Error> {
    if !is_primitive(w)? {
        return Err(Error::NotReduced);
    }
    let v_y = w.multiply(&longest_finite(w.datum()));
    let v = v_y.finite_part();
    let cert = primitive_from_finite(&v)?;
    debug_assert_eq!(&cert.w, w);
    // v y^lambda = y^{v(lambda)} v in canonical form
    debug_assert_eq!(
        cert.v.act_on_weight(&cert.lambda),
        v_y.translation_part()
    );
    Ok(cert)
}

/// All primitive elements, sorted by length and then window (type A) or
/// structure.
pub fn enumerate_primitive(datum: &Arc<RootDatum>) -> Result<Vec<GroupElement>, Error> {
    require_simply_connected(datum)?;
    let mut out: Vec<GroupElement> = finite_weyl_group(datum)
        .iter()
        .map(|v| primitive_from_finite(v).map(|c| c.w))
        .collect::<Result<_, _>>()?;
    sort_elements(&mut out);
    Ok(out)
}

pub(crate) fn sort_elements(elements: &mut [GroupElement]) {
    elements.sort_by(|a, b| {
        a.length()
            .cmp(&b.length())
            .then_with(|| match (window_of(a), window_of(b)) {
                (Ok(wa), Ok(wb)) => wa.cmp(&wb),
                _ => a.cmp(b),
            })
    });
}

/// The unique factorization of an element of the lowest two-sided cell:
/// `w = v1 . w_0 y^lambda . v2` with `v1` and `v2^{-1}` primitive and
/// `lambda` dominant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellFactorization {
    pub w: GroupElement,
    pub v1: GroupElement,
    pub lambda: Weight,
    pub v2: GroupElement,
}

impl CellFactorization {
    /// The middle factor `w_0 y^lambda`.
    pub fn middle(&self) -> GroupElement {
        longest_finite(self.w.datum()).multiply(&GroupElement::translation(&self.lambda))
    }

    /// Reassembles and re-checks every condition of the factorization:
    /// the product, both reduced rewritings, primitivity, and dominance.
    pub fn is_valid(&self) -> bool {
        let datum = self.w.datum();
        let w0 = longest_finite(datum);
        let middle = self.middle();
        let product = self.v1.multiply(&middle).multiply(&self.v2);
        if product != self.w || !self.lambda.is_dominant() {
            return false;
        }
        let lengths_add =
            self.v1.length() + middle.length() + self.v2.length() == self.w.length();
        // rewriting w_0 y^lambda = y^{w_0(lambda)} w_0 moves the
        // translation to the left; that splitting must be reduced too
        let shifted = GroupElement::translation(&w0.act_on_weight(&self.lambda));
        let left = self.v1.multiply(&shifted);
        let alt_lengths = left.length() + w0.length() + self.v2.length() == self.w.length();
        lengths_add
            && alt_lengths
            && is_primitive(&self.v1) == Ok(true)
            && is_primitive(&self.v2.inverse()) == Ok(true)
    }
}

/// Decides membership in the lowest two-sided cell constructively and
/// returns the unique factorization for members.
///
/// Take `z` minimal in `W_f w`; its alcove image sits in a dominant box
/// `B_eta`, and `v2 = y^{-eta} z` has primitive inverse. The left finite
/// part `u` forces `v1 = primitive_from_finite(u)` and
/// `lambda = eta - lambda(v1)`; `w` is in the cell exactly when that
/// `lambda` is dominant.
pub fn lowest_cell_factorize(w: &GroupElement) -> Result<Option<CellFactorization>, Error> {
    require_simply_connected(w.datum())?;
    let datum = w.datum().clone();
    let finite: Vec<usize> = datum.finite_indices().collect();
    let (u, z) = w.parabolic_decompose(&finite, Side::MinRight);
    let eta = box_of(&z);
    debug_assert!(eta.is_dominant());
    let v2 = GroupElement::translation(&eta.neg()).multiply(&z);
    let cert = primitive_from_finite(&u)?;
    let lambda = eta.sub(&cert.lambda);
    if !lambda.is_dominant() {
        return Ok(None);
    }
    let cf = CellFactorization {
        w: w.clone(),
        v1: cert.w,
        lambda,
        v2,
    };
    if !cf.is_valid() {
        debug_assert!(false, "constructed factorization must validate");
        return Ok(None);
    }
    Ok(Some(cf))
}
