//! Root data: finite root systems from a Cartan matrix, the built-in type A
//! lattices, and the affine roots `beta + k*delta` built on the finite
//! coroots.
//!
//! Coordinate conventions. Weights (elements of `Y`) are stored in the
//! fundamental-weight basis for simply connected data and in the standard
//! basis of `Z^n` for `GL_n`; covectors (elements of `Y^vee`) are stored in
//! the dual basis, which is the simple-coroot basis in the simply connected
//! case. With dual bases the pairing `Y x Y^vee -> Z` is the dot product.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::Zero;
use thiserror::Error;

/// Lattice coordinates. Desk-scale verification keeps all coordinates far
/// below the `i64` range; Laurent coefficients, where growth is real, use
/// arbitrary precision.
pub type Coord = i64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DatumError {
    #[error("cartan matrix must be square ({rows} rows, {cols} cols)")]
    NotSquare { rows: usize, cols: usize },
    #[error("cartan matrix diagonal entry ({i},{i}) must be 2, found {value}")]
    BadDiagonal { i: usize, value: Coord },
    #[error("cartan matrix off-diagonal entry ({i},{j}) must be <= 0, found {value}")]
    BadOffDiagonal { i: usize, j: usize, value: Coord },
    #[error("cartan matrix zero pattern must be symmetric at ({i},{j})")]
    AsymmetricZeroPattern { i: usize, j: usize },
    #[error("cartan matrix is not of finite type: root system does not close")]
    NotFiniteType,
    #[error("cartan matrix must be irreducible: Dynkin diagram is disconnected")]
    Disconnected,
}

/// Which lattice realization a datum uses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    /// `SL_n`, simply connected type `A_{n-1}`; `n` is the window size.
    Sl(usize),
    /// `GL_n` with weight lattice `Z^n`.
    Gl(usize),
    /// An arbitrary finite-type Cartan matrix, realized simply connected.
    Generic,
}

/// A finite root system together with the derived data the affine
/// construction needs: the positive roots with their coroots, the highest
/// coroot `theta`, and the dominant short root `phi'`.
pub struct RootDatum {
    family: Family,
    rank: usize,
    dim: usize,
    cartan: Vec<Vec<Coord>>,
    /// `(root in Y-coords, coroot in Y^vee-coords)`, positive roots only.
    positive: Vec<(Vec<Coord>, Vec<Coord>)>,
    /// Positive coroot vector -> index into `positive`.
    coroot_index: HashMap<Vec<Coord>, usize>,
    /// Highest coroot, in covector coordinates (`None` when rank 0).
    theta: Option<Vec<Coord>>,
    /// Dominant short root, in weight coordinates (`None` when rank 0).
    phi_prime: Option<Vec<Coord>>,
}

impl PartialEq for RootDatum {
    fn eq(&self, other: &Self) -> bool {
        self.family == other.family && self.cartan == other.cartan
    }
}
impl Eq for RootDatum {}

impl fmt::Debug for RootDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RootDatum({})", self.descriptor())
    }
}

fn type_a_cartan(rank: usize) -> Vec<Vec<Coord>> {
    let mut c = vec![vec![0; rank]; rank];
    for i in 0..rank {
        c[i][i] = 2;
        if i + 1 < rank {
            c[i][i + 1] = -1;
            c[i + 1][i] = -1;
        }
    }
    c
}

impl RootDatum {
    /// Simply connected `SL_n` (`n >= 1`); `SL_1` is the trivial group.
    pub fn sl(n: usize) -> Arc<RootDatum> {
        assert!(n >= 1, "SL_n needs n >= 1");
        Arc::new(Self::build(Family::Sl(n), type_a_cartan(n - 1)).expect("type A is finite type"))
    }

    /// `GL_n` with weight lattice `Z^n`.
    pub fn gl(n: usize) -> Arc<RootDatum> {
        assert!(n >= 1, "GL_n needs n >= 1");
        Arc::new(Self::build(Family::Gl(n), type_a_cartan(n - 1)).expect("type A is finite type"))
    }

    /// A simply connected datum from an arbitrary finite-type Cartan matrix
    /// with entries `cartan[i][j] = <alpha'_j, alpha'^vee_i>`.
    pub fn from_cartan(cartan: Vec<Vec<Coord>>) -> Result<Arc<RootDatum>, DatumError> {
        Self::build(Family::Generic, cartan).map(Arc::new)
    }

    fn build(family: Family, cartan: Vec<Vec<Coord>>) -> Result<RootDatum, DatumError> {
        let rank = cartan.len();
        for (i, row) in cartan.iter().enumerate() {
            if row.len() != rank {
                return Err(DatumError::NotSquare {
                    rows: rank,
                    cols: row.len(),
                });
            }
            for (j, &v) in row.iter().enumerate() {
                if i == j && v != 2 {
                    return Err(DatumError::BadDiagonal { i, value: v });
                }
                if i != j && v > 0 {
                    return Err(DatumError::BadOffDiagonal { i, j, value: v });
                }
                if i != j && (v == 0) != (cartan[j][i] == 0) {
                    return Err(DatumError::AsymmetricZeroPattern { i, j });
                }
            }
        }
        if rank > 0 && !is_connected(&cartan) {
            return Err(DatumError::Disconnected);
        }
        // Finite type iff every principal minor is positive. This must come
        // before root generation: a degenerate matrix makes the simple
        // roots linearly dependent in fundamental-weight coordinates, so
        // the orbit there can close even for an infinite system.
        for mask in 1u64..(1u64 << rank) {
            let idx: Vec<usize> = (0..rank).filter(|i| mask & (1 << i) != 0).collect();
            let sub: Vec<Vec<i128>> = idx
                .iter()
                .map(|&r| idx.iter().map(|&c| cartan[r][c] as i128).collect())
                .collect();
            if bareiss_determinant(sub) <= 0 {
                return Err(DatumError::NotFiniteType);
            }
        }

        let dim = match family {
            Family::Gl(n) => n,
            _ => rank,
        };
        let mut datum = RootDatum {
            family,
            rank,
            dim,
            cartan,
            positive: Vec::new(),
            coroot_index: HashMap::new(),
            theta: None,
            phi_prime: None,
        };
        datum.generate_roots()?;
        Ok(datum)
    }

    /// Closes the simple roots under the simple reflections, tracking each
    /// root's expansion in the simple roots to read off positivity.
    fn generate_roots(&mut self) -> Result<(), DatumError> {
        const ROOT_CAP: usize = 4096;
        if self.rank == 0 {
            return Ok(());
        }
        // (expansion in simple roots, Y-coords, coroot covector)
        let mut seen: HashMap<Vec<Coord>, (Vec<Coord>, Vec<Coord>)> = HashMap::new();
        let mut queue: Vec<(Vec<Coord>, Vec<Coord>, Vec<Coord>)> = Vec::new();
        for j in 1..=self.rank {
            let mut m = vec![0; self.rank];
            m[j - 1] = 1;
            let y = self.simple_root(j);
            let cov = self.simple_coroot(j);
            seen.insert(y.clone(), (m.clone(), cov.clone()));
            queue.push((m, y, cov));
        }
        while let Some((m, y, cov)) = queue.pop() {
            for i in 1..=self.rank {
                let pairing = dot(&y, &self.simple_coroot(i));
                let mut m2 = m.clone();
                m2[i - 1] -= pairing;
                let y2 = self.reflect_weight(i, &y);
                let cov2 = self.reflect_covector(i, &cov);
                if !seen.contains_key(&y2) {
                    if seen.len() >= ROOT_CAP {
                        return Err(DatumError::NotFiniteType);
                    }
                    seen.insert(y2.clone(), (m2.clone(), cov2.clone()));
                    queue.push((m2, y2, cov2));
                }
            }
        }
        let mut positive: Vec<(Vec<Coord>, Vec<Coord>)> = seen
            .into_iter()
            .filter(|(_, (m, _))| m.iter().all(|&c| c >= 0))
            .map(|(y, (_, cov))| (y, cov))
            .collect();
        positive.sort();
        self.coroot_index = positive
            .iter()
            .enumerate()
            .map(|(i, (_, cov))| (cov.clone(), i))
            .collect();

        // theta is the highest coroot, phi' the dominant short root paired
        // with it. Among dominant roots the short one has the componentwise
        // larger coroot.
        let dominant: Vec<&(Vec<Coord>, Vec<Coord>)> = positive
            .iter()
            .filter(|(y, _)| (1..=self.rank).all(|i| dot(y, &self.simple_coroot(i)) >= 0))
            .collect();
        let (phi, theta) = dominant
            .iter()
            .find(|cand| {
                dominant.iter().all(|other| {
                    ge_componentwise(
                        &self.coroot_expansion(&cand.1),
                        &self.coroot_expansion(&other.1),
                    )
                })
            })
            .map(|cand| (cand.0.clone(), cand.1.clone()))
            .expect("irreducible finite root system has a highest coroot");
        self.phi_prime = Some(phi);
        self.theta = Some(theta);
        self.positive = positive;
        Ok(())
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    /// Number of simple reflections of the finite system.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Dimension of the weight lattice `Y`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The window size for built-in type A data.
    pub fn window_size(&self) -> Option<usize> {
        match self.family {
            Family::Sl(n) | Family::Gl(n) => Some(n),
            Family::Generic => None,
        }
    }

    pub fn is_type_a(&self) -> bool {
        matches!(self.family, Family::Sl(_) | Family::Gl(_))
    }

    /// Fundamental weights form a basis of `Y` exactly for the simply
    /// connected realizations.
    pub fn is_simply_connected(&self) -> bool {
        !matches!(self.family, Family::Gl(_))
    }

    pub fn cartan(&self) -> &[Vec<Coord>] {
        &self.cartan
    }

    pub fn descriptor(&self) -> String {
        match &self.family {
            Family::Sl(n) => format!("SL:{n}"),
            Family::Gl(n) => format!("GL:{n}"),
            Family::Generic => {
                let rows: Vec<String> = self
                    .cartan
                    .iter()
                    .map(|r| {
                        let cells: Vec<String> = r.iter().map(|c| c.to_string()).collect();
                        format!("[{}]", cells.join(","))
                    })
                    .collect();
                format!("cartan:[{}]", rows.join(","))
            }
        }
    }

    /// Generator indices of the extended affine Weyl group: `0` is the
    /// affine node, `1..=rank` the finite ones. Empty in rank 0.
    pub fn generator_indices(&self) -> std::ops::RangeInclusive<usize> {
        if self.rank == 0 {
            1..=0
        } else {
            0..=self.rank
        }
    }

    pub fn finite_indices(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.rank
    }

    /// `alpha'_j` in weight coordinates, `j` in `1..=rank`.
    pub fn simple_root(&self, j: usize) -> Vec<Coord> {
        match self.family {
            Family::Gl(n) => {
                let mut v = vec![0; n];
                v[j - 1] = 1;
                v[j] = -1;
                v
            }
            _ => (0..self.rank).map(|i| self.cartan[i][j - 1]).collect(),
        }
    }

    /// `alpha'^vee_j` in covector coordinates, `j` in `1..=rank`.
    pub fn simple_coroot(&self, j: usize) -> Vec<Coord> {
        match self.family {
            Family::Gl(n) => {
                let mut v = vec![0; n];
                v[j - 1] = 1;
                v[j] = -1;
                v
            }
            _ => {
                let mut v = vec![0; self.rank];
                v[j - 1] = 1;
                v
            }
        }
    }

    /// Expansion of a coroot in the simple coroots.
    fn coroot_expansion(&self, cov: &[Coord]) -> Vec<Coord> {
        match self.family {
            // For GL the covector (e_i - e_j) has expansion given by the
            // partial sums of its coordinates.
            Family::Gl(n) => {
                let mut acc = 0;
                (0..n - 1)
                    .map(|i| {
                        acc += cov[i];
                        acc
                    })
                    .collect()
            }
            _ => cov.to_vec(),
        }
    }

    /// `<lambda, beta>` for a weight and a covector in dual coordinates.
    pub fn pair(&self, weight: &[Coord], covector: &[Coord]) -> Coord {
        dot(weight, covector)
    }

    /// `<lambda, alpha'^vee_i>` without materializing the coroot.
    pub fn pair_simple_coroot(&self, weight: &[Coord], i: usize) -> Coord {
        match self.family {
            Family::Gl(_) => weight[i - 1] - weight[i],
            _ => weight[i - 1],
        }
    }

    /// `s_i` acting on `Y`.
    pub fn reflect_weight(&self, i: usize, weight: &[Coord]) -> Vec<Coord> {
        let c = self.pair_simple_coroot(weight, i);
        let root = self.simple_root(i);
        weight
            .iter()
            .zip(root.iter())
            .map(|(w, r)| w - c * r)
            .collect()
    }

    /// `s_i` acting on `Y^vee`.
    pub fn reflect_covector(&self, i: usize, cov: &[Coord]) -> Vec<Coord> {
        let c = dot(&self.simple_root(i), cov);
        let coroot = self.simple_coroot(i);
        cov.iter()
            .zip(coroot.iter())
            .map(|(v, r)| v - c * r)
            .collect()
    }

    /// Positive roots as `(root, coroot)` coordinate pairs.
    pub fn positive_roots(&self) -> &[(Vec<Coord>, Vec<Coord>)] {
        &self.positive
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive.len()
    }

    /// Sign of a finite coroot vector: `Some(true)` positive, `Some(false)`
    /// negative, `None` when the vector is not a coroot at all.
    pub fn coroot_sign(&self, cov: &[Coord]) -> Option<bool> {
        if self.coroot_index.contains_key(cov) {
            return Some(true);
        }
        let neg: Vec<Coord> = cov.iter().map(|c| -c).collect();
        if self.coroot_index.contains_key(&neg) {
            return Some(false);
        }
        None
    }

    /// The root paired with a (positive or negative) coroot.
    pub fn root_of_coroot(&self, cov: &[Coord]) -> Option<Vec<Coord>> {
        if let Some(&i) = self.coroot_index.get(cov) {
            return Some(self.positive[i].0.clone());
        }
        let neg: Vec<Coord> = cov.iter().map(|c| -c).collect();
        self.coroot_index
            .get(&neg)
            .map(|&i| self.positive[i].0.iter().map(|c| -c).collect())
    }

    /// Highest coroot (covector coordinates); `None` in rank 0.
    pub fn theta(&self) -> Option<&[Coord]> {
        self.theta.as_deref()
    }

    /// Dominant short root (weight coordinates); `None` in rank 0.
    pub fn phi_prime(&self) -> Option<&[Coord]> {
        self.phi_prime.as_deref()
    }

    /// `i`-th fundamental weight, `i` in `1..=rank`. For `GL_n` this is
    /// `eps_1 + ... + eps_i`, which pairs like a fundamental weight but is
    /// not part of a basis.
    pub fn fundamental_weight(&self, i: usize) -> Vec<Coord> {
        match self.family {
            Family::Gl(n) => {
                let mut v = vec![0; n];
                for e in v.iter_mut().take(i) {
                    *e = 1;
                }
                v
            }
            _ => {
                let mut v = vec![0; self.rank];
                v[i - 1] = 1;
                v
            }
        }
    }

    /// `rho = sum of the fundamental weights`; pairs to 1 with every simple
    /// coroot.
    pub fn rho(&self) -> Vec<Coord> {
        let mut v = vec![0; self.dim];
        for i in 1..=self.rank {
            add_assign(&mut v, &self.fundamental_weight(i));
        }
        v
    }

    pub fn is_dominant(&self, weight: &[Coord]) -> bool {
        (1..=self.rank).all(|i| self.pair_simple_coroot(weight, i) >= 0)
    }

    /// Marks of the affine diagram: `<fundamental_weight(i), theta>`.
    pub fn mark(&self, i: usize) -> Coord {
        self.pair(&self.fundamental_weight(i), self.theta().expect("rank > 0"))
    }

    /// A rational interior point of the basic alcove, in weight coordinates
    /// on the level 1 plane. Exact; used for box computations.
    pub fn alcove_point(&self) -> Vec<Ratio<Coord>> {
        match self.family {
            // The GL alcove is a prism; pick the interior point with
            // coordinates (n-j)/n + 1/(2n).
            Family::Gl(n) => (0..n)
                .map(|j| {
                    Ratio::new((n - j) as Coord, n as Coord)
                        + Ratio::new(1, 2 * n as Coord)
                })
                .collect(),
            // Barycenter of {0, fw_i / mark_i}: coords 1/((rank+1) mark_i).
            _ => (1..=self.rank)
                .map(|i| Ratio::new(1, (self.rank as Coord + 1) * self.mark(i)))
                .collect(),
        }
    }

    /// Whether a weight lies in the finite root lattice `Q'_f`.
    pub fn in_root_lattice(&self, weight: &[Coord]) -> bool {
        match self.family {
            Family::Sl(n) => {
                let class: i64 = weight
                    .iter()
                    .enumerate()
                    .map(|(idx, c)| ((idx as i64 + 1) * c).rem_euclid(n as i64))
                    .sum();
                class % n as i64 == 0
            }
            Family::Gl(_) => weight.iter().sum::<Coord>() == 0,
            Family::Generic => {
                // Solve C m = weight over Z by Cramer's rule with exact
                // integers.
                if self.rank == 0 {
                    return weight.iter().all(|&c| c == 0);
                }
                let n = self.rank;
                let base: Vec<Vec<BigInt>> = (0..n)
                    .map(|i| (0..n).map(|j| BigInt::from(self.cartan[i][j])).collect())
                    .collect();
                let det = determinant(&base);
                assert!(!det.is_zero(), "finite-type Cartan matrix is invertible");
                for j in 0..n {
                    let mut m = base.clone();
                    for i in 0..n {
                        m[i][j] = BigInt::from(weight[i]);
                    }
                    if (determinant(&m) % &det) != BigInt::zero() {
                        return false;
                    }
                }
                true
            }
        }
    }

    /// The class of a weight in `Y / Q'_f` as a power of the distinguished
    /// length-zero generator, for built-in type A data. `SL_n` reduces mod
    /// `n`; `GL_n` is honest `Z`.
    pub fn pi_class(&self, weight: &[Coord]) -> Option<Coord> {
        match self.family {
            Family::Sl(n) => {
                let class: i64 = weight
                    .iter()
                    .enumerate()
                    .map(|(idx, c)| (idx as i64 + 1) * c)
                    .sum();
                Some(class.rem_euclid(n as i64))
            }
            Family::Gl(_) => Some(weight.iter().sum()),
            Family::Generic => None,
        }
    }
}

/// Fraction-free Gaussian elimination; exact for the small integer
/// matrices seen here.
fn bareiss_determinant(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            let Some(swap) = (k + 1..n).find(|&r| m[r][k] != 0) else {
                return 0;
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

fn is_connected(cartan: &[Vec<Coord>]) -> bool {
    let n = cartan.len();
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        for j in 0..n {
            if !seen[j] && cartan[i][j] != 0 {
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

fn ge_componentwise(a: &[Coord], b: &[Coord]) -> bool {
    a.iter().zip(b.iter()).all(|(x, y)| x >= y)
}

pub(crate) fn dot(a: &[Coord], b: &[Coord]) -> Coord {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b.iter()).map(|(x, y)| x * y).sum()
}

pub(crate) fn add_assign(a: &mut [Coord], b: &[Coord]) {
    for (x, y) in a.iter_mut().zip(b.iter()) {
        *x += y;
    }
}

fn determinant(m: &[Vec<BigInt>]) -> BigInt {
    // Cofactor expansion; ranks here are tiny.
    let n = m.len();
    if n == 0 {
        return BigInt::from(1);
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut det = BigInt::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigInt>> = (1..n)
            .map(|i| {
                (0..n)
                    .filter(|&k| k != j)
                    .map(|k| m[i][k].clone())
                    .collect()
            })
            .collect();
        let term = &m[0][j] * determinant(&minor);
        if j % 2 == 0 {
            det += term;
        } else {
            det -= term;
        }
    }
    det
}

/// An affine root `beta + k*delta` with `beta` a coroot of the finite
/// system, stored in covector coordinates.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AffineRoot {
    beta: Vec<Coord>,
    k: Coord,
}

impl AffineRoot {
    /// Checked constructor: `beta` must be a coroot of `datum`.
    pub fn new(datum: &RootDatum, beta: Vec<Coord>, k: Coord) -> Option<AffineRoot> {
        datum.coroot_sign(&beta)?;
        Some(AffineRoot { beta, k })
    }

    pub(crate) fn new_unchecked(beta: Vec<Coord>, k: Coord) -> AffineRoot {
        AffineRoot { beta, k }
    }

    /// The affine simple root `alpha_i`: the simple coroot for finite `i`,
    /// `delta - theta` for `i = 0`.
    pub fn simple(datum: &RootDatum, i: usize) -> AffineRoot {
        if i == 0 {
            let beta = datum
                .theta()
                .expect("rank 0 has no affine node")
                .iter()
                .map(|c| -c)
                .collect();
            AffineRoot { beta, k: 1 }
        } else {
            AffineRoot {
                beta: datum.simple_coroot(i),
                k: 0,
            }
        }
    }

    pub fn beta(&self) -> &[Coord] {
        &self.beta
    }

    pub fn delta_coefficient(&self) -> Coord {
        self.k
    }

    /// Positive iff `k > 0`, or `k = 0` and `beta` is a positive coroot.
    pub fn is_positive(&self, datum: &RootDatum) -> bool {
        match self.k.cmp(&0) {
            std::cmp::Ordering::Greater => true,
            std::cmp::Ordering::Less => false,
            std::cmp::Ordering::Equal => {
                datum.coroot_sign(&self.beta).expect("valid affine root")
            }
        }
    }

    pub fn negated(&self) -> AffineRoot {
        AffineRoot {
            beta: self.beta.iter().map(|c| -c).collect(),
            k: -self.k,
        }
    }
}

impl fmt::Debug for AffineRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} + {}d", self.beta, self.k)
    }
}

/// A weight `lambda` in `Y`, tied to its datum.
#[derive(Clone, PartialEq, Eq)]
pub struct Weight {
    datum: Arc<RootDatum>,
    coords: Vec<Coord>,
}

impl std::hash::Hash for Weight {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.coords.hash(state);
    }
}

impl Weight {
    pub fn new(datum: Arc<RootDatum>, coords: Vec<Coord>) -> Weight {
        assert_eq!(coords.len(), datum.dim(), "weight has wrong dimension");
        Weight { datum, coords }
    }

    pub fn zero(datum: Arc<RootDatum>) -> Weight {
        let coords = vec![0; datum.dim()];
        Weight { datum, coords }
    }

    pub fn fundamental(datum: Arc<RootDatum>, i: usize) -> Weight {
        let coords = datum.fundamental_weight(i);
        Weight { datum, coords }
    }

    pub fn rho(datum: Arc<RootDatum>) -> Weight {
        let coords = datum.rho();
        Weight { datum, coords }
    }

    pub fn datum(&self) -> &Arc<RootDatum> {
        &self.datum
    }

    pub fn coords(&self) -> &[Coord] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.datum.is_dominant(&self.coords)
    }

    pub fn pair(&self, covector: &[Coord]) -> Coord {
        self.datum.pair(&self.coords, covector)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        assert_eq!(self.datum, other.datum);
        Weight {
            datum: self.datum.clone(),
            coords: self
                .coords
                .iter()
                .zip(other.coords.iter())
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Weight {
        Weight {
            datum: self.datum.clone(),
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, c: Coord) -> Weight {
        Weight {
            datum: self.datum.clone(),
            coords: self.coords.iter().map(|x| c * x).collect(),
        }
    }

    /// Componentwise-minimal decomposition `lambda = mu - nu` with both
    /// parts dominant.
    pub fn dominant_decomposition(&self) -> (Weight, Weight) {
        let mut nu = Weight::zero(self.datum.clone());
        for i in 1..=self.datum.rank() {
            let p = self.datum.pair_simple_coroot(&self.coords, i);
            if p < 0 {
                nu = nu.add(&Weight::fundamental(self.datum.clone(), i).scale(-p));
            }
        }
        // For GL the eps-sum can still be arbitrary; central shifts are
        // dominant already, so nothing more is needed.
        let mu = self.add(&nu);
        debug_assert!(mu.is_dominant() && nu.is_dominant());
        (mu, nu)
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", cells.join(","))
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", cells.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl_data_have_type_a_cartan() {
        let d = RootDatum::sl(4);
        assert_eq!(d.rank(), 3);
        assert_eq!(
            d.cartan(),
            &[vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]
        );
        assert_eq!(d.num_positive_roots(), 6);
        // theta = sum of all simple coroots, phi' = sum of all simple roots
        assert_eq!(d.theta().unwrap(), &[1, 1, 1]);
        assert_eq!(d.phi_prime().unwrap(), &[1, 0, 1]);
        assert!(d.is_simply_connected());
    }

    #[test]
    fn gl_lattice_is_standard() {
        let d = RootDatum::gl(3);
        assert_eq!(d.rank(), 2);
        assert_eq!(d.dim(), 3);
        assert_eq!(d.simple_root(1), vec![1, -1, 0]);
        assert_eq!(d.theta().unwrap(), &[1, 0, -1]);
        assert!(!d.is_simply_connected());
        assert!(d.is_dominant(&[3, 1, 0]));
        assert!(!d.is_dominant(&[0, 1, 0]));
    }

    #[test]
    fn generic_b2_has_correct_theta() {
        // B_2: alpha_1 long, alpha_2 short with <alpha_1, alpha_2^vee> = -1,
        // <alpha_2, alpha_1^vee> = -2 gives cartan [[2,-2],[-1,2]].
        let d = RootDatum::from_cartan(vec![vec![2, -2], vec![-1, 2]]).unwrap();
        assert_eq!(d.num_positive_roots(), 4);
        // Highest coroot has expansion strictly dominating all others.
        let theta = d.theta().unwrap().to_vec();
        for (_, cov) in d.positive_roots() {
            assert!(ge_componentwise(&theta, cov));
        }
        // phi' is dominant.
        assert!(d.is_dominant(d.phi_prime().unwrap()));
    }

    #[test]
    fn invalid_cartan_rejected() {
        assert!(matches!(
            RootDatum::from_cartan(vec![vec![2, 1], vec![-1, 2]]),
            Err(DatumError::BadOffDiagonal { .. })
        ));
        assert!(matches!(
            RootDatum::from_cartan(vec![vec![1]]),
            Err(DatumError::BadDiagonal { .. })
        ));
        assert!(matches!(
            RootDatum::from_cartan(vec![vec![2, -1], vec![0, 2]]),
            Err(DatumError::AsymmetricZeroPattern { .. })
        ));
        // Affine A_1 matrix is not finite type.
        assert!(matches!(
            RootDatum::from_cartan(vec![vec![2, -2], vec![-2, 2]]),
            Err(DatumError::NotFiniteType)
        ));
        // A_1 x A_1 is finite type but disconnected.
        assert!(matches!(
            RootDatum::from_cartan(vec![vec![2, 0], vec![0, 2]]),
            Err(DatumError::Disconnected)
        ));
    }

    #[test]
    fn affine_root_signs() {
        let d = RootDatum::sl(2);
        let a0 = AffineRoot::simple(&d, 0);
        assert_eq!(a0.beta(), &[-1]);
        assert_eq!(a0.delta_coefficient(), 1);
        assert!(a0.is_positive(&d));
        assert!(!a0.negated().is_positive(&d));
        let a1 = AffineRoot::simple(&d, 1);
        assert!(a1.is_positive(&d));
        assert!(!a1.negated().is_positive(&d));
        // delta-shifted negative coroot is positive
        let r = AffineRoot::new(&d, vec![-1], 1).unwrap();
        assert!(r.is_positive(&d));
        // not a coroot
        assert!(AffineRoot::new(&d, vec![3], 0).is_none());
    }

    #[test]
    fn root_lattice_membership() {
        let sl3 = RootDatum::sl(3);
        assert!(sl3.in_root_lattice(&[1, 1])); // alpha_1 + alpha_2 = w_1 + w_2? no: theta
        assert!(sl3.in_root_lattice(&[2, -1])); // alpha_1
        assert!(!sl3.in_root_lattice(&[1, 0]));
        assert_eq!(sl3.pi_class(&[1, 0]), Some(1));
        assert_eq!(sl3.pi_class(&[0, 1]), Some(2));
        assert_eq!(sl3.pi_class(&[2, -1]), Some(0));

        let gl3 = RootDatum::gl(3);
        assert!(gl3.in_root_lattice(&[1, 0, -1]));
        assert!(!gl3.in_root_lattice(&[1, 0, 0]));
        assert_eq!(gl3.pi_class(&[1, 0, 0]), Some(1));

        let b2 = RootDatum::from_cartan(vec![vec![2, -2], vec![-1, 2]]).unwrap();
        for (y, _) in b2.positive_roots() {
            assert!(b2.in_root_lattice(y));
        }
        // B_2 has fundamental group Z/2; w_2 is in the root lattice iff
        // its Cramer solution is integral.
        let w1_in = b2.in_root_lattice(&[1, 0]);
        let w2_in = b2.in_root_lattice(&[0, 1]);
        assert!(w1_in != w2_in, "exactly one fundamental weight generates Z/2");
    }

    #[test]
    fn weight_arithmetic_and_decomposition() {
        let d = RootDatum::sl(3);
        let lam = Weight::new(d.clone(), vec![2, -3]);
        let (mu, nu) = lam.dominant_decomposition();
        assert!(mu.is_dominant());
        assert!(nu.is_dominant());
        assert_eq!(mu.sub(&nu), lam);
        assert_eq!(nu.coords(), &[0, 3]);

        let gl = RootDatum::gl(2);
        let lam = Weight::new(gl.clone(), vec![-1, 3]);
        let (mu, nu) = lam.dominant_decomposition();
        assert!(mu.is_dominant() && nu.is_dominant());
        assert_eq!(mu.sub(&nu), lam);
    }

    #[test]
    fn alcove_point_is_interior() {
        for d in [RootDatum::sl(2), RootDatum::sl(4)] {
            let p = d.alcove_point();
            for i in 1..=d.rank() {
                assert!(p[i - 1] > Ratio::new(0, 1));
            }
            let theta = d.theta().unwrap().to_vec();
            let pairing: Ratio<Coord> = p
                .iter()
                .zip(theta.iter())
                .map(|(x, t)| x * Ratio::from_integer(*t))
                .sum();
            assert!(pairing < Ratio::new(1, 1));
        }
        let gl = RootDatum::gl(3);
        let p = gl.alcove_point();
        assert!(p[0] > p[1] && p[1] > p[2]);
        assert!(p[0] - p[2] < Ratio::new(1, 1));
    }

    #[test]
    fn sl1_is_trivial() {
        let d = RootDatum::sl(1);
        assert_eq!(d.rank(), 0);
        assert_eq!(d.num_positive_roots(), 0);
        assert!(d.generator_indices().next().is_none());
        assert!(d.theta().is_none());
    }
}
