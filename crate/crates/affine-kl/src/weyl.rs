//! The extended affine Weyl group `W_e = Y x| W_f`.
//!
//! Elements are kept in the canonical form `y^lambda u` with `u` in the
//! finite Weyl group and `lambda` in `Y`, so equality is structural and
//! constant-time-ish. Words, lengths, descents and the Bruhat order are all
//! derived from the action on the affine roots `beta + k delta`.

use std::collections::HashSet;
use std::sync::Arc;

use num_rational::Ratio;
use once_cell::sync::OnceCell;

use crate::root::{add_assign, dot, AffineRoot, Coord, RootDatum, Weight};
use crate::Error;

/// An element `y^lambda u` of the extended affine Weyl group.
///
/// `mat_y` is the matrix of `u` on the weight lattice, `mat_covec` the
/// matrix on the covector lattice; storing both makes inversion a pair of
/// transposes. The cached length is never part of equality.
#[derive(Clone)]
pub struct GroupElement {
    datum: Arc<RootDatum>,
    trans: Vec<Coord>,
    mat_y: Vec<Coord>,
    mat_covec: Vec<Coord>,
    length: OnceCell<u64>,
}

impl PartialEq for GroupElement {
    fn eq(&self, other: &Self) -> bool {
        self.same_datum(other) && self.trans == other.trans && self.mat_y == other.mat_y
    }
}
impl Eq for GroupElement {}

impl std::hash::Hash for GroupElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.trans.hash(state);
        self.mat_y.hash(state);
    }
}

impl PartialOrd for GroupElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Structural order: translation part, then matrix. Deterministic, not
/// related to Bruhat order.
impl Ord for GroupElement {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.trans
            .cmp(&other.trans)
            .then_with(|| self.mat_y.cmp(&other.mat_y))
    }
}

fn mat_id(d: usize) -> Vec<Coord> {
    let mut m = vec![0; d * d];
    for i in 0..d {
        m[i * d + i] = 1;
    }
    m
}

fn mat_mul(d: usize, a: &[Coord], b: &[Coord]) -> Vec<Coord> {
    let mut out = vec![0; d * d];
    for r in 0..d {
        for k in 0..d {
            let ark = a[r * d + k];
            if ark == 0 {
                continue;
            }
            for c in 0..d {
                out[r * d + c] += ark * b[k * d + c];
            }
        }
    }
    out
}

fn mat_vec(d: usize, m: &[Coord], v: &[Coord]) -> Vec<Coord> {
    (0..d).map(|r| dot(&m[r * d..(r + 1) * d], v)).collect()
}

fn mat_vec_transposed(d: usize, m: &[Coord], v: &[Coord]) -> Vec<Coord> {
    let mut out = vec![0; d];
    for c in 0..d {
        let vc = v[c];
        if vc == 0 {
            continue;
        }
        for (r, o) in out.iter_mut().enumerate() {
            *o += m[c * d + r] * vc;
        }
    }
    out
}

fn mat_transpose(d: usize, m: &[Coord]) -> Vec<Coord> {
    let mut out = vec![0; d * d];
    for r in 0..d {
        for c in 0..d {
            out[c * d + r] = m[r * d + c];
        }
    }
    out
}

/// Matrices of the reflection attached to a root/coroot pair.
fn reflection_mats(d: usize, root_y: &[Coord], coroot: &[Coord]) -> (Vec<Coord>, Vec<Coord>) {
    let mut my = mat_id(d);
    let mut mc = mat_id(d);
    for r in 0..d {
        for c in 0..d {
            my[r * d + c] -= root_y[r] * coroot[c];
            mc[r * d + c] -= coroot[r] * root_y[c];
        }
    }
    (my, mc)
}

impl GroupElement {
    fn from_parts(
        datum: Arc<RootDatum>,
        trans: Vec<Coord>,
        mat_y: Vec<Coord>,
        mat_covec: Vec<Coord>,
    ) -> GroupElement {
        GroupElement {
            datum,
            trans,
            mat_y,
            mat_covec,
            length: OnceCell::new(),
        }
    }

    pub fn identity(datum: &Arc<RootDatum>) -> GroupElement {
        let d = datum.dim();
        GroupElement::from_parts(datum.clone(), vec![0; d], mat_id(d), mat_id(d))
    }

    /// The simple reflection `s_i`; `i = 0` is the affine one,
    /// `s_0 = y^{phi'} s_{phi'}`.
    pub fn simple(datum: &Arc<RootDatum>, i: usize) -> GroupElement {
        let d = datum.dim();
        assert!(
            datum.generator_indices().contains(&i),
            "generator index {i} out of range"
        );
        if i == 0 {
            let phi = datum.phi_prime().expect("rank > 0").to_vec();
            let theta = datum.theta().expect("rank > 0").to_vec();
            let (my, mc) = reflection_mats(d, &phi, &theta);
            GroupElement::from_parts(datum.clone(), phi, my, mc)
        } else {
            let (my, mc) = reflection_mats(d, &datum.simple_root(i), &datum.simple_coroot(i));
            GroupElement::from_parts(datum.clone(), vec![0; d], my, mc)
        }
    }

    /// The translation `y^lambda`.
    pub fn translation(weight: &Weight) -> GroupElement {
        let d = weight.datum().dim();
        GroupElement::from_parts(
            weight.datum().clone(),
            weight.coords().to_vec(),
            mat_id(d),
            mat_id(d),
        )
    }

    /// The reflection attached to an affine root,
    /// `s_{beta + k delta} = y^{-k gamma} s_gamma` for `gamma` the finite
    /// root paired with `beta`.
    pub fn reflection(datum: &Arc<RootDatum>, root: &AffineRoot) -> GroupElement {
        let gamma = datum
            .root_of_coroot(root.beta())
            .expect("affine root has a coroot finite part");
        let d = datum.dim();
        let (my, mc) = reflection_mats(d, &gamma, root.beta());
        // Normalize to the positive finite part so the translation part is
        // well defined.
        let (gamma, k) = if datum.coroot_sign(root.beta()).unwrap() {
            (gamma, root.delta_coefficient())
        } else {
            (
                gamma.iter().map(|c| -c).collect::<Vec<_>>(),
                -root.delta_coefficient(),
            )
        };
        let trans: Vec<Coord> = gamma.iter().map(|c| -k * c).collect();
        GroupElement::from_parts(datum.clone(), trans, my, mc)
    }

    /// The distinguished length-zero generator `pi` of built-in type A
    /// data, raised to the power `k`.
    pub fn pi(datum: &Arc<RootDatum>, k: Coord) -> Result<GroupElement, Error> {
        let n = datum.window_size().ok_or(Error::PiUnavailable)? as Coord;
        if datum.rank() == 0 {
            // GL_1 is all translations; SL_1 is trivial.
            return Ok(if datum.dim() == 0 {
                GroupElement::identity(datum)
            } else {
                GroupElement::translation(&Weight::new(datum.clone(), vec![k]))
            });
        }
        let mut pi = GroupElement::translation(&Weight::fundamental(datum.clone(), 1));
        for i in datum.finite_indices() {
            pi = pi.multiply(&GroupElement::simple(datum, i));
        }
        let k = match datum.family() {
            crate::root::Family::Sl(_) => k.rem_euclid(n),
            _ => k,
        };
        Ok(pi.power(k))
    }

    pub fn datum(&self) -> &Arc<RootDatum> {
        &self.datum
    }

    pub fn same_datum(&self, other: &GroupElement) -> bool {
        Arc::ptr_eq(&self.datum, &other.datum) || self.datum == other.datum
    }

    /// Translation part `lambda` of the canonical form `y^lambda u`.
    pub fn translation_part(&self) -> Weight {
        Weight::new(self.datum.clone(), self.trans.clone())
    }

    /// Finite part `u` of the canonical form, as an element of `W_f`.
    pub fn finite_part(&self) -> GroupElement {
        GroupElement::from_parts(
            self.datum.clone(),
            vec![0; self.datum.dim()],
            self.mat_y.clone(),
            self.mat_covec.clone(),
        )
    }

    pub fn is_identity(&self) -> bool {
        self.trans.iter().all(|&c| c == 0) && self.mat_y == mat_id(self.datum.dim())
    }

    pub fn is_finite(&self) -> bool {
        self.trans.iter().all(|&c| c == 0)
    }

    pub fn is_translation(&self) -> bool {
        self.mat_y == mat_id(self.datum.dim())
    }

    /// Whether the element lies in the non-extended affine group `W_a`.
    pub fn is_in_affine_subgroup(&self) -> bool {
        self.datum.in_root_lattice(&self.trans)
    }

    pub fn multiply(&self, other: &GroupElement) -> GroupElement {
        assert!(self.same_datum(other), "datum mismatch in multiply");
        let d = self.datum.dim();
        let mut trans = mat_vec(d, &self.mat_y, &other.trans);
        add_assign(&mut trans, &self.trans);
        GroupElement::from_parts(
            self.datum.clone(),
            trans,
            mat_mul(d, &self.mat_y, &other.mat_y),
            mat_mul(d, &self.mat_covec, &other.mat_covec),
        )
    }

    pub fn inverse(&self) -> GroupElement {
        let d = self.datum.dim();
        let mat_y = mat_transpose(d, &self.mat_covec);
        let mat_covec = mat_transpose(d, &self.mat_y);
        let trans = mat_vec(d, &mat_y, &self.trans)
            .into_iter()
            .map(|c| -c)
            .collect();
        GroupElement::from_parts(self.datum.clone(), trans, mat_y, mat_covec)
    }

    pub fn power(&self, k: Coord) -> GroupElement {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut acc = GroupElement::identity(&self.datum);
        for _ in 0..k.unsigned_abs() {
            acc = acc.multiply(&base);
        }
        acc
    }

    /// Action on an affine root: `u` first, then the translation twists the
    /// `delta` coefficient by the pairing.
    pub fn act_on_root(&self, root: &AffineRoot) -> AffineRoot {
        let d = self.datum.dim();
        let beta = mat_vec(d, &self.mat_covec, root.beta());
        let k = root.delta_coefficient() - dot(&self.trans, &beta);
        AffineRoot::new_unchecked(beta, k)
    }

    /// Action of the inverse on an affine root, without materializing the
    /// inverse element.
    fn inverse_act_on_root(&self, root: &AffineRoot) -> AffineRoot {
        let d = self.datum.dim();
        let beta = mat_vec_transposed(d, &self.mat_y, root.beta());
        let k = root.delta_coefficient() + dot(&self.trans, root.beta());
        AffineRoot::new_unchecked(beta, k)
    }

    /// Action on a weight through the finite part only (translations act
    /// trivially on the level 0 plane).
    pub fn act_on_weight(&self, w: &Weight) -> Weight {
        Weight::new(
            self.datum.clone(),
            mat_vec(self.datum.dim(), &self.mat_y, w.coords()),
        )
    }

    /// Raw action of the finite part on a covector.
    pub fn covector_action(&self, v: &[Coord]) -> Vec<Coord> {
        mat_vec(self.datum.dim(), &self.mat_covec, v)
    }

    /// Action on a rational point of the level 1 plane, in weight
    /// coordinates: `q -> u(q) + lambda`.
    pub fn act_on_level_point(&self, q: &[Ratio<Coord>]) -> Vec<Ratio<Coord>> {
        let d = self.datum.dim();
        (0..d)
            .map(|r| {
                let mut acc = Ratio::from_integer(self.trans[r]);
                for c in 0..d {
                    let m = self.mat_y[r * d + c];
                    if m != 0 {
                        acc += Ratio::from_integer(m) * q[c];
                    }
                }
                acc
            })
            .collect()
    }

    /// `s_i g < g`, tested by the sign of `g^{-1}(alpha_i)`.
    pub fn left_descent(&self, i: usize) -> bool {
        let image = self.inverse_act_on_root(&AffineRoot::simple(&self.datum, i));
        !image.is_positive(&self.datum)
    }

    /// `g s_i < g`, tested by the sign of `g(alpha_i)`.
    pub fn right_descent(&self, i: usize) -> bool {
        let image = self.act_on_root(&AffineRoot::simple(&self.datum, i));
        !image.is_positive(&self.datum)
    }

    pub fn left_descent_set(&self) -> Vec<usize> {
        self.datum
            .generator_indices()
            .filter(|&i| self.left_descent(i))
            .collect()
    }

    pub fn right_descent_set(&self) -> Vec<usize> {
        self.datum
            .generator_indices()
            .filter(|&i| self.right_descent(i))
            .collect()
    }

    /// Coxeter length, by greedy left-descent stripping; each strip removes
    /// exactly one inversion, and a length-zero remainder has none.
    pub fn length(&self) -> u64 {
        *self.length.get_or_init(|| {
            let mut g = self.clone();
            let mut len = 0u64;
            'outer: loop {
                for i in self.datum.generator_indices() {
                    if g.left_descent(i) {
                        g = GroupElement::simple(&self.datum, i).multiply(&g);
                        len += 1;
                        continue 'outer;
                    }
                }
                return len;
            }
        })
    }

    /// The length-zero element of the coset `g W_a` (the `Pi`-part of `g`).
    pub fn pi_part(&self) -> GroupElement {
        let mut g = self.clone();
        'outer: loop {
            for i in self.datum.generator_indices() {
                if g.left_descent(i) {
                    g = GroupElement::simple(&self.datum, i).multiply(&g);
                    continue 'outer;
                }
            }
            return g;
        }
    }

    /// Exponent of the `Pi`-part on the distinguished generator, for
    /// built-in type A data. Reduced mod `n` for `SL_n`.
    pub fn pi_exponent(&self) -> Result<Coord, Error> {
        self.datum
            .pi_class(&self.trans)
            .ok_or(Error::PiUnavailable)
    }

    /// The lexicographically smallest reduced word, as a length-zero part
    /// followed by generator letters.
    pub fn reduced_word(&self) -> Word {
        let pi_part = self.pi_part();
        let mut rest = pi_part.inverse().multiply(self);
        let mut letters = Vec::new();
        'outer: loop {
            for i in self.datum.generator_indices() {
                if rest.left_descent(i) {
                    letters.push(i);
                    rest = GroupElement::simple(&self.datum, i).multiply(&rest);
                    continue 'outer;
                }
            }
            break;
        }
        debug_assert!(rest.is_identity());
        Word { pi_part, letters }
    }

    /// The inversion set `{alpha in R_+ : g(alpha) in R_-}`, enumerated per
    /// finite coroot; its cardinality equals the length.
    pub fn inversion_set(&self) -> Vec<AffineRoot> {
        let mut out = Vec::new();
        let d = self.datum.dim();
        let mut coroots: Vec<(Vec<Coord>, bool)> = Vec::new();
        for (_, cov) in self.datum.positive_roots() {
            coroots.push((cov.clone(), true));
            coroots.push((cov.iter().map(|c| -c).collect(), false));
        }
        for (beta, positive) in coroots {
            let image_beta = mat_vec(d, &self.mat_covec, &beta);
            let p = dot(&self.trans, &image_beta);
            let image_negative_at_zero = !self
                .datum
                .coroot_sign(&image_beta)
                .expect("image of a coroot is a coroot");
            // alpha = beta + k delta is positive for k >= k_min; its image
            // beta' + (k - p) delta is negative for k < p, or k = p when
            // beta' is negative.
            let k_min = if positive { 0 } else { 1 };
            let k_max = if image_negative_at_zero { p } else { p - 1 };
            for k in k_min..=k_max {
                out.push(AffineRoot::new_unchecked(beta.clone(), k));
            }
        }
        out
    }

    /// `ell(xy) = ell(x) + ell(y)`.
    pub fn is_reduced_pair(x: &GroupElement, y: &GroupElement) -> bool {
        x.multiply(y).length() == x.length() + y.length()
    }

    /// The root-theoretic criterion for a reduced pair: `x` keeps every
    /// root of `y(R_+) /\ R_-` negative. Independent of `is_reduced_pair`;
    /// the two are cross-tested.
    pub fn is_reduced_pair_root_criterion(x: &GroupElement, y: &GroupElement) -> bool {
        y.inversion_set()
            .iter()
            .map(|alpha| y.act_on_root(alpha))
            .all(|image| !x.act_on_root(&image).is_positive(&x.datum))
    }

    /// Minimal-coset-representative factorization with respect to the
    /// parabolic generated by `J`.
    ///
    /// `MinLeft` returns `(m, p)` with `w = m * p`, `p` in `W_J` and `m`
    /// minimal in `w W_J`; `MinRight` returns `(p, m)` with `w = p * m` and
    /// `m` minimal in `W_J w`.
    pub fn parabolic_decompose(&self, j: &[usize], side: Side) -> (GroupElement, GroupElement) {
        let mut m = self.clone();
        let mut acc = GroupElement::identity(&self.datum);
        'outer: loop {
            for &i in j {
                match side {
                    Side::MinLeft => {
                        if m.right_descent(i) {
                            let s = GroupElement::simple(&self.datum, i);
                            m = m.multiply(&s);
                            acc = s.multiply(&acc);
                            continue 'outer;
                        }
                    }
                    Side::MinRight => {
                        if m.left_descent(i) {
                            let s = GroupElement::simple(&self.datum, i);
                            m = s.multiply(&m);
                            acc = acc.multiply(&s);
                            continue 'outer;
                        }
                    }
                }
            }
            break;
        }
        match side {
            Side::MinLeft => (m, acc),
            Side::MinRight => (acc, m),
        }
    }

    /// The unique factorization `w = u . y^beta v` with `u, v` finite,
    /// `beta` dominant, and `y^beta v` minimal in `W_f w`.
    pub fn three_factor(&self) -> (GroupElement, Weight, GroupElement) {
        let finite: Vec<usize> = self.datum.finite_indices().collect();
        let (u, m) = self.parabolic_decompose(&finite, Side::MinRight);
        let beta = m.translation_part();
        debug_assert!(beta.is_dominant());
        let v = m.finite_part();
        (u, beta, v)
    }

    /// Projection `W_a -> W_f` forgetting the translation part; restricts
    /// the action to the level 0 plane.
    pub fn psi(&self) -> Result<GroupElement, Error> {
        if !self.is_in_affine_subgroup() {
            return Err(Error::NotInAffineSubgroup);
        }
        Ok(self.finite_part())
    }

    /// Extended Bruhat order: comparable only within one `W_a`-coset, there
    /// by iterating the lifting property along descents of `w`.
    pub fn bruhat_leq(&self, w: &GroupElement) -> bool {
        self.bruhat_leq_by(w, false)
    }

    /// Same order, but resolving descent choices differently; used to check
    /// independence of the chosen reduced word.
    pub fn bruhat_leq_by(&self, w: &GroupElement, pick_largest_descent: bool) -> bool {
        assert!(self.same_datum(w), "datum mismatch in bruhat_leq");
        let diff: Vec<Coord> = w
            .trans
            .iter()
            .zip(self.trans.iter())
            .map(|(a, b)| a - b)
            .collect();
        if !self.datum.in_root_lattice(&diff) {
            return false;
        }
        let mut x = self.clone();
        let mut w = w.clone();
        loop {
            if x.length() > w.length() {
                return false;
            }
            let descent = if pick_largest_descent {
                self.datum.generator_indices().rev().find(|&i| w.left_descent(i))
            } else {
                self.datum.generator_indices().find(|&i| w.left_descent(i))
            };
            let Some(i) = descent else {
                // w has length zero; x is below it iff equal.
                return x == w;
            };
            let s = GroupElement::simple(&self.datum, i);
            w = s.multiply(&w);
            if x.left_descent(i) {
                x = s.multiply(&x);
            }
        }
    }

    /// The lower Bruhat interval `{x : x <= w}`, materialized through the
    /// subword property along the canonical reduced word.
    pub fn bruhat_interval(&self) -> Vec<GroupElement> {
        let word = self.reduced_word();
        let mut set: HashSet<GroupElement> = HashSet::new();
        set.insert(word.pi_part.clone());
        for &i in &word.letters {
            let s = GroupElement::simple(&self.datum, i);
            let next: Vec<GroupElement> = set.iter().map(|g| g.multiply(&s)).collect();
            set.extend(next);
        }
        let mut out: Vec<GroupElement> = set.into_iter().collect();
        out.sort_by(|a, b| a.length().cmp(&b.length()).then_with(|| a.cmp(b)));
        out
    }
}

impl std::fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", crate::parse::format_element(self))
    }
}

impl std::fmt::Display for GroupElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", crate::parse::format_element(self))
    }
}

/// Which side carries the minimal coset representative in
/// [`GroupElement::parabolic_decompose`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    MinLeft,
    MinRight,
}

/// A word in the generators: a length-zero part followed by `s`-letters.
#[derive(Clone, Debug)]
pub struct Word {
    pub pi_part: GroupElement,
    pub letters: Vec<usize>,
}

impl Word {
    pub fn evaluate(&self) -> GroupElement {
        let datum = self.pi_part.datum().clone();
        let mut g = self.pi_part.clone();
        for &i in &self.letters {
            g = g.multiply(&GroupElement::simple(&datum, i));
        }
        g
    }

    /// A word is reduced when its letter count matches the length of its
    /// evaluation.
    pub fn is_reduced(&self) -> bool {
        self.evaluate().length() == self.letters.len() as u64
    }
}

/// The longest element of the parabolic generated by `J`, with an iteration
/// cap guarding against infinite parabolics.
pub fn longest_element(datum: &Arc<RootDatum>, j: &[usize]) -> Result<GroupElement, Error> {
    const CAP: usize = 200_000;
    let mut w = GroupElement::identity(datum);
    let mut steps = 0;
    'outer: loop {
        for &i in j {
            if !w.left_descent(i) {
                w = GroupElement::simple(datum, i).multiply(&w);
                steps += 1;
                if steps > CAP {
                    return Err(Error::InfiniteParabolic);
                }
                continue 'outer;
            }
        }
        return Ok(w);
    }
}

/// Longest element of the finite Weyl group.
pub fn longest_finite(datum: &Arc<RootDatum>) -> GroupElement {
    let j: Vec<usize> = datum.finite_indices().collect();
    longest_element(datum, &j).expect("finite Weyl group")
}

/// The Dynkin diagram automorphism `d` with `w_0(alpha_i) = -alpha_{d(i)}`.
pub fn d_automorphism(datum: &Arc<RootDatum>, i: usize) -> usize {
    let w0 = longest_finite(datum);
    let image = w0.act_on_root(&AffineRoot::simple(datum, i)).negated();
    for j in datum.finite_indices() {
        if image == AffineRoot::simple(datum, j) {
            return j;
        }
    }
    panic!("w_0 permutes the negated simple roots");
}

/// All elements of the finite Weyl group, ordered by (length, structure).
pub fn finite_weyl_group(datum: &Arc<RootDatum>) -> Vec<GroupElement> {
    let mut seen = HashSet::new();
    let mut queue = vec![GroupElement::identity(datum)];
    seen.insert(queue[0].clone());
    while let Some(g) = queue.pop() {
        for i in datum.finite_indices() {
            let next = g.multiply(&GroupElement::simple(datum, i));
            if seen.insert(next.clone()) {
                queue.push(next);
            }
        }
    }
    let mut out: Vec<GroupElement> = seen.into_iter().collect();
    out.sort_by(|a, b| a.length().cmp(&b.length()).then_with(|| a.cmp(b)));
    out
}

/// All elements of `W_e` of length at most `max_len`. For `SL_n` every
/// `Pi`-coset is included; `GL_n` has infinitely many length-zero elements,
/// so only the trivial coset (that is, `W_a`) is enumerated there, and
/// generic data likewise.
pub fn elements_up_to_length(datum: &Arc<RootDatum>, max_len: u64) -> Vec<GroupElement> {
    let mut seeds = vec![GroupElement::identity(datum)];
    if let crate::root::Family::Sl(n) = datum.family() {
        for k in 1..*n as Coord {
            seeds.push(GroupElement::pi(datum, k).expect("type A"));
        }
    }
    let mut seen: HashSet<GroupElement> = seeds.iter().cloned().collect();
    let mut frontier = seeds;
    let mut out: Vec<GroupElement> = frontier.clone();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for g in &frontier {
            for i in datum.generator_indices() {
                let h = g.multiply(&GroupElement::simple(datum, i));
                if !h.right_descent(i) {
                    // got shorter, skip
                    continue;
                }
                if seen.insert(h.clone()) {
                    next.push(h);
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out.sort_by(|a, b| a.length().cmp(&b.length()).then_with(|| a.cmp(b)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root::Family;

    fn sl(n: usize) -> Arc<RootDatum> {
        RootDatum::sl(n)
    }

    #[test]
    fn simple_reflections_are_involutions() {
        for datum in [sl(2), sl(4), RootDatum::gl(3)] {
            for i in datum.generator_indices() {
                let s = GroupElement::simple(&datum, i);
                assert!(s.multiply(&s).is_identity());
                assert_eq!(s.length(), 1);
                assert_eq!(s.inversion_set().len(), 1);
                assert_eq!(s.inversion_set()[0], AffineRoot::simple(&datum, i));
                // s_i(alpha_i) = -alpha_i
                let a = AffineRoot::simple(&datum, i);
                assert_eq!(s.act_on_root(&a), a.negated());
            }
        }
    }

    #[test]
    fn translation_action_matches_pairing() {
        // y^beta'(x) = x - <x, beta'> delta on roots.
        let datum = sl(3);
        let lam = Weight::new(datum.clone(), vec![1, 2]);
        let y = GroupElement::translation(&lam);
        for (_, cov) in datum.positive_roots() {
            let r = AffineRoot::new(&datum, cov.clone(), 5).unwrap();
            let image = y.act_on_root(&r);
            assert_eq!(image.beta(), cov.as_slice());
            assert_eq!(image.delta_coefficient(), 5 - datum.pair(lam.coords(), cov));
        }
    }

    #[test]
    fn group_law_and_inverse() {
        let datum = sl(4);
        let s0 = GroupElement::simple(&datum, 0);
        let s1 = GroupElement::simple(&datum, 1);
        let pi = GroupElement::pi(&datum, 1).unwrap();
        let g = pi.multiply(&s1).multiply(&s0);
        assert!(g.multiply(&g.inverse()).is_identity());
        assert!(g.inverse().multiply(&g).is_identity());
        // identity law
        let e = GroupElement::identity(&datum);
        assert_eq!(e.multiply(&g), g);
        assert_eq!(g.multiply(&e), g);
        // action compatibility: (gh)(r) = g(h(r))
        let r = AffineRoot::simple(&datum, 2);
        let h = s1.multiply(&pi);
        assert_eq!(
            g.multiply(&h).act_on_root(&r),
            g.act_on_root(&h.act_on_root(&r))
        );
    }

    #[test]
    fn pi_is_length_zero_of_full_order() {
        for n in [2usize, 3, 4, 5] {
            let datum = sl(n);
            let pi = GroupElement::pi(&datum, 1).unwrap();
            assert_eq!(pi.length(), 0);
            assert!(pi.power(n as Coord).is_identity());
            for k in 1..n as Coord {
                assert!(!pi.power(k).is_identity());
            }
            // pi s_i pi^{-1} = s_{i+1 mod n}
            for i in datum.generator_indices() {
                let lhs = pi
                    .multiply(&GroupElement::simple(&datum, i))
                    .multiply(&pi.inverse());
                let next = (i + 1) % n;
                assert_eq!(lhs, GroupElement::simple(&datum, next));
            }
        }
    }

    #[test]
    fn lengths_match_inversion_counts() {
        let datum = sl(3);
        for g in elements_up_to_length(&datum, 5) {
            assert_eq!(g.length(), g.inversion_set().len() as u64);
            // word round-trip
            let w = g.reduced_word();
            assert!(w.is_reduced());
            assert_eq!(w.evaluate(), g);
        }
    }

    #[test]
    fn longest_element_of_s4() {
        let datum = sl(4);
        let w0 = longest_finite(&datum);
        assert_eq!(w0.length(), 6);
        assert!(w0.multiply(&w0).is_identity());
        // d swaps 1 <-> 3 in type A_3
        assert_eq!(d_automorphism(&datum, 1), 3);
        assert_eq!(d_automorphism(&datum, 2), 2);
        // SL_3: d swaps 1 <-> 2
        let d3 = sl(3);
        assert_eq!(d_automorphism(&d3, 1), 2);
        // SL_2: identity
        let d2 = sl(2);
        assert_eq!(d_automorphism(&d2, 1), 1);
    }

    #[test]
    fn finite_group_sizes() {
        assert_eq!(finite_weyl_group(&sl(2)).len(), 2);
        assert_eq!(finite_weyl_group(&sl(3)).len(), 6);
        assert_eq!(finite_weyl_group(&sl(4)).len(), 24);
        let b2 = RootDatum::from_cartan(vec![vec![2, -2], vec![-1, 2]]).unwrap();
        assert_eq!(finite_weyl_group(&b2).len(), 8);
    }

    #[test]
    fn descents_and_length_on_s0() {
        let datum = sl(2);
        let s0 = GroupElement::simple(&datum, 0);
        assert!(s0.left_descent(0));
        assert!(!s0.left_descent(1));
        let e = GroupElement::identity(&datum);
        assert!(!e.left_descent(0) && !e.left_descent(1));
        assert_eq!(s0.length(), 1);
    }

    #[test]
    fn parabolic_decomposition_contracts() {
        let datum = sl(3);
        let finite: Vec<usize> = datum.finite_indices().collect();
        for g in elements_up_to_length(&datum, 4) {
            for side in [Side::MinLeft, Side::MinRight] {
                let (a, b) = g.parabolic_decompose(&finite, side);
                assert_eq!(a.multiply(&b), g);
                assert_eq!(a.length() + b.length(), g.length());
                match side {
                    Side::MinLeft => {
                        assert!(b.is_finite());
                        assert!(datum.finite_indices().all(|i| !a.right_descent(i)));
                    }
                    Side::MinRight => {
                        assert!(a.is_finite());
                        assert!(datum.finite_indices().all(|i| !b.left_descent(i)));
                    }
                }
            }
            // J = empty: (w, e)
            let (a, b) = g.parabolic_decompose(&[], Side::MinLeft);
            assert_eq!(a, g);
            assert!(b.is_identity());
        }
    }

    #[test]
    fn three_factor_reassembles() {
        let datum = sl(3);
        for g in elements_up_to_length(&datum, 5) {
            let (u, beta, v) = g.three_factor();
            assert!(u.is_finite() && v.is_finite());
            assert!(beta.is_dominant());
            let m = GroupElement::translation(&beta).multiply(&v);
            assert_eq!(u.multiply(&m), g);
            assert_eq!(u.length() + m.length(), g.length());
        }
        // w in W_f decomposes as (w, 0, e)
        let w = GroupElement::simple(&datum, 1)
            .multiply(&GroupElement::simple(&datum, 2));
        let (u, beta, v) = w.three_factor();
        assert_eq!(u, w);
        assert!(beta.is_zero());
        assert!(v.is_identity());
        // dominant regular translation: (e, beta, e)
        let lam = Weight::new(datum.clone(), vec![2, 1]);
        let (u, beta, v) = GroupElement::translation(&lam).three_factor();
        assert!(u.is_identity() && v.is_identity());
        assert_eq!(beta, lam);
    }

    #[test]
    fn psi_projects_onto_finite_part() {
        let datum = sl(3);
        let s0 = GroupElement::simple(&datum, 0);
        // Psi(s_0) = s_{phi'}: the reflection of the highest root
        let psi0 = s0.psi().unwrap();
        assert!(psi0.is_finite());
        let theta = datum.theta().unwrap().to_vec();
        let r = AffineRoot::new(&datum, theta, 0).unwrap();
        assert_eq!(psi0.act_on_root(&r), r.negated());
        for i in datum.finite_indices() {
            assert_eq!(
                GroupElement::simple(&datum, i).psi().unwrap(),
                GroupElement::simple(&datum, i)
            );
        }
        // pi is not in W_a
        let pi = GroupElement::pi(&datum, 1).unwrap();
        assert_eq!(pi.psi(), Err(Error::NotInAffineSubgroup));
    }

    #[test]
    fn bruhat_order_small_cases() {
        let datum = sl(2);
        let e = GroupElement::identity(&datum);
        let s1 = GroupElement::simple(&datum, 1);
        let s0 = GroupElement::simple(&datum, 0);
        let s1s0 = s1.multiply(&s0);
        let pi = GroupElement::pi(&datum, 1).unwrap();
        assert!(e.bruhat_leq(&s1s0));
        assert!(s1.bruhat_leq(&s1s0));
        assert!(!s0.bruhat_leq(&s1)); // both length 1, different
        assert!(!pi.bruhat_leq(&e)); // incomparable pi parts
        assert!(!pi.bruhat_leq(&pi.multiply(&pi))); // pi^2 = e in SL_2: different coset from pi
        assert!(pi.bruhat_leq(&pi));
        // subword products of [1, 0]: e, s1, s0, s1s0
        let interval = s1s0.bruhat_interval();
        assert_eq!(interval.len(), 4);
        assert!(s0.bruhat_leq(&s1s0));
        for x in &interval {
            assert!(x.bruhat_leq(&s1s0));
            assert_eq!(x.bruhat_leq(&s1s0), x.bruhat_leq_by(&s1s0, true));
        }
    }

    #[test]
    fn reduced_pair_criteria_agree() {
        let datum = sl(3);
        let elements = elements_up_to_length(&datum, 3);
        for x in &elements {
            for y in &elements {
                assert_eq!(
                    GroupElement::is_reduced_pair(x, y),
                    GroupElement::is_reduced_pair_root_criterion(x, y),
                    "mismatch at x={x:?} y={y:?}"
                );
            }
        }
    }

    #[test]
    fn affine_reflection_squares_to_identity() {
        let datum = sl(3);
        for (_, cov) in datum.positive_roots() {
            for k in -2..=2 {
                let r = AffineRoot::new(&datum, cov.clone(), k).unwrap();
                let s = GroupElement::reflection(&datum, &r);
                assert!(s.multiply(&s).is_identity());
                assert_eq!(s.act_on_root(&r), r.negated());
                // negated root gives the same reflection
                assert_eq!(GroupElement::reflection(&datum, &r.negated()), s);
            }
        }
    }

    #[test]
    fn rank_zero_is_trivial() {
        let sl1 = sl(1);
        let e = GroupElement::identity(&sl1);
        assert_eq!(e.length(), 0);
        assert!(GroupElement::pi(&sl1, 5).unwrap().is_identity());
        let gl1 = RootDatum::gl(1);
        let pi = GroupElement::pi(&gl1, 3).unwrap();
        assert_eq!(pi.length(), 0);
        assert_eq!(pi.translation_part().coords(), &[3]);
        assert!(matches!(gl1.family(), Family::Gl(1)));
    }
}
