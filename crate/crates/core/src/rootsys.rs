//! Cartan data, the inner product on weights and simple reflections.
//!
//! Conventions used everywhere in the crate:
//!
//! * Dynkin nodes follow Bourbaki numbering. Indices are 0-based in the API
//!   (node `i` here is `α_{i+1}` in the usual notation) and 1-based in every
//!   serialized or printed form.
//! * `cartan[i][j] = (α_j, α_i^∨)`. Column `j` of the Cartan matrix is
//!   therefore the simple root `α_j` written in fundamental-weight
//!   coordinates.
//! * Long roots have squared length 2, so `d_i = (α_i, α_i) / 2` is 1 for
//!   every node of a simply-laced type.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;
use crate::Q;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
}

impl Family {
    pub const ALL: [Family; 5] = [Family::A, Family::B, Family::C, Family::D, Family::E];

    pub fn admits_rank(self, rank: usize) -> bool {
        match self {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::C => rank >= 3,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::E => "E",
        };
        f.write_str(c)
    }
}

impl std::str::FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E" => Ok(Family::E),
            other => Err(format!("unknown Cartan family `{other}` (expected one of A, B, C, D, E)")),
        }
    }
}

/// A Cartan type with an admissible rank. B₂ = C₂ and D₃ = A₃ are only
/// reachable under their first name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CartanType {
    family: Family,
    rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        if family.admits_rank(rank) {
            Ok(CartanType { family, rank })
        } else {
            Err(Error::InadmissibleType { family, rank })
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_simply_laced(&self) -> bool {
        matches!(self.family, Family::A | Family::D | Family::E)
    }

    /// Cartan matrix in the `(α_j, α_i^∨)` convention.
    fn cartan_matrix(&self) -> Vec<Vec<i32>> {
        let n = self.rank;
        let mut a = vec![vec![0; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut bond = |i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match self.family {
            Family::A | Family::B | Family::C => (0..n - 1).for_each(|i| bond(i, i + 1)),
            Family::D => {
                (0..n - 2).for_each(|i| bond(i, i + 1));
                bond(n - 3, n - 1);
            }
            Family::E => {
                bond(0, 2);
                bond(1, 3);
                (2..n - 1).for_each(|i| bond(i, i + 1));
            }
        }
        match self.family {
            // α_n short: (α_{n-1}, α_n^∨) = -2
            Family::B => a[n - 1][n - 2] = -2,
            // α_n long: (α_n, α_{n-1}^∨) = -2
            Family::C => a[n - 2][n - 1] = -2,
            _ => {}
        }
        a
    }

    fn symmetrizer(&self) -> Vec<Q> {
        let n = self.rank;
        let half = Q::new(1, 2);
        let one = Q::from_integer(1);
        match self.family {
            Family::B => (0..n).map(|i| if i + 1 == n { half } else { one }).collect(),
            Family::C => (0..n).map(|i| if i + 1 == n { one } else { half }).collect(),
            _ => vec![one; n],
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// A weight in fundamental-weight coordinates: `coords[i] = (μ, α_i^∨)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i32>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut w = Self::zero(rank);
        w.0[i] = 1;
        w
    }

    pub fn coords(&self) -> &[i32] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_antidominant(&self) -> bool {
        self.0.iter().all(|&c| c <= 0)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    ty: CartanType,
    cartan: Vec<Vec<i32>>,
    symmetrizer: Vec<Q>,
    gram: Vec<Vec<Q>>,
    positive_roots: Vec<Vec<i32>>,
    positive_coroots: Vec<Vec<i32>>,
}

impl RootSystem {
    pub fn new(ty: CartanType) -> Result<Self> {
        let cartan = ty.cartan_matrix();
        let symmetrizer = ty.symmetrizer();
        let inv = linalg::inverse(&linalg::from_integer(&cartan))
            .ok_or_else(|| Error::Invariant(format!("Cartan matrix of {ty} is singular")))?;
        // (ω_i, ω_j) = d_i (A⁻¹)_{ij}
        let gram = inv
            .iter()
            .zip(&symmetrizer)
            .map(|(row, &d)| row.iter().map(|&x| d * x).collect())
            .collect();

        let n = ty.rank();
        // s_i(β) = β - (β, α_i^∨) α_i with (β, α_i^∨) = Σ_j c_j A[i][j]
        let positive_roots = positive_closure(n, |c, i| dot(&cartan[i], c));
        // s_i(β^∨) = β^∨ - (α_i, β^∨) α_i^∨ with (α_i, β^∨) = Σ_j c_j A[j][i]
        let positive_coroots =
            positive_closure(n, |c, i| (0..n).map(|j| c[j] * cartan[j][i]).sum());

        Ok(RootSystem {
            ty,
            cartan,
            symmetrizer,
            gram,
            positive_roots,
            positive_coroots,
        })
    }

    pub fn cartan_type(&self) -> CartanType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.ty.rank()
    }

    pub fn is_simply_laced(&self) -> bool {
        self.ty.is_simply_laced()
    }

    pub fn cartan(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    /// `d_i = (α_i, α_i) / 2`.
    pub fn symmetrizer(&self) -> &[Q] {
        &self.symmetrizer
    }

    /// `gram[i][j] = (ω_i, ω_j)`.
    pub fn gram_fundamental(&self) -> &[Vec<Q>] {
        &self.gram
    }

    /// `(α_i, α_j)`.
    pub fn root_inner(&self, i: usize, j: usize) -> Q {
        self.symmetrizer[i] * Q::from_integer(self.cartan[i][j] as i64)
    }

    pub fn root_length_sq(&self, i: usize) -> Q {
        self.root_inner(i, i)
    }

    /// `Ω²`, the common squared root length; only defined when simply laced.
    pub fn common_root_length_sq(&self) -> Option<Q> {
        self.is_simply_laced().then(|| Q::from_integer(2))
    }

    /// Simple root `α_i` in fundamental-weight coordinates.
    pub fn simple_root(&self, i: usize) -> Weight {
        Weight(self.cartan.iter().map(|row| row[i]).collect())
    }

    pub fn fundamental(&self, i: usize) -> Weight {
        Weight::fundamental(self.rank(), i)
    }

    pub fn inner(&self, mu: &Weight, nu: &Weight) -> Q {
        let n = self.rank();
        assert_eq!(mu.rank(), n, "weight rank mismatch");
        assert_eq!(nu.rank(), n, "weight rank mismatch");
        let mut acc = Q::zero();
        for i in 0..n {
            if mu.0[i] == 0 {
                continue;
            }
            let row: Q = (0..n).fold(Q::zero(), |s, j| s + self.gram[i][j] * nu.0[j] as i64);
            acc += row * mu.0[i] as i64;
        }
        acc
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i < self.rank() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index: i, rank: self.rank() })
        }
    }

    pub fn check_weight(&self, mu: &Weight) -> Result<()> {
        if mu.rank() == self.rank() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: self.rank(), got: mu.rank() })
        }
    }

    /// `s_i(μ) = μ - (μ, α_i^∨) α_i`.
    pub fn simple_reflection(&self, i: usize, mu: &Weight) -> Result<Weight> {
        self.check_index(i)?;
        self.check_weight(mu)?;
        Ok(self.reflect_unchecked(i, mu))
    }

    pub(crate) fn reflect_unchecked(&self, i: usize, mu: &Weight) -> Weight {
        let mut out = mu.clone();
        self.reflect_in_place(i, &mut out);
        out
    }

    pub(crate) fn reflect_in_place(&self, i: usize, mu: &mut Weight) {
        let c = mu.0[i];
        if c != 0 {
            for (j, x) in mu.0.iter_mut().enumerate() {
                *x -= c * self.cartan[j][i];
            }
        }
    }

    /// Positive roots as coefficient vectors in the simple-root basis.
    pub fn positive_roots(&self) -> &[Vec<i32>] {
        &self.positive_roots
    }

    /// Positive coroots as coefficient vectors in the simple-coroot basis.
    pub fn positive_coroots(&self) -> &[Vec<i32>] {
        &self.positive_coroots
    }

    /// `(λ, β^∨)` for every positive root `β`.
    pub fn positive_coroot_values(&self, lambda: &Weight) -> Vec<i32> {
        assert_eq!(lambda.rank(), self.rank(), "weight rank mismatch");
        self.positive_coroots
            .iter()
            .map(|c| dot(c, &lambda.0))
            .collect()
    }

    /// `ρ`, which has every fundamental coordinate equal to 1.
    pub fn rho(&self) -> Weight {
        Weight(vec![1; self.rank()])
    }

    /// Half the sum of the positive roots, in fundamental coordinates.
    pub fn half_sum_positive_roots(&self) -> Vec<Q> {
        let n = self.rank();
        let mut sum = vec![0i64; n];
        for c in &self.positive_roots {
            for (k, s) in sum.iter_mut().enumerate() {
                *s += (0..n).map(|j| (self.cartan[k][j] * c[j]) as i64).sum::<i64>();
            }
        }
        sum.into_iter().map(|s| Q::new(s, 2)).collect()
    }
}

fn dot(a: &[i32], b: &[i32]) -> i32 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Closes the simple basis vectors under simple reflections and keeps the
/// positive ones. `pairing(c, i)` is the coefficient subtracted from
/// `c[i]` by the `i`-th reflection.
fn positive_closure(n: usize, pairing: impl Fn(&[i32], usize) -> i32) -> Vec<Vec<i32>> {
    let mut seen: HashSet<Vec<i32>> = HashSet::new();
    let mut queue = VecDeque::new();
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = 1;
        seen.insert(e.clone());
        queue.push_back(e);
    }
    while let Some(c) = queue.pop_front() {
        for i in 0..n {
            let p = pairing(&c, i);
            if p == 0 {
                continue;
            }
            let mut r = c.clone();
            r[i] -= p;
            if seen.insert(r.clone()) {
                queue.push_back(r);
            }
        }
    }
    let mut pos: Vec<Vec<i32>> = seen
        .into_iter()
        .filter(|c| c.iter().all(|&x| x >= 0))
        .collect();
    pos.sort_by(|a, b| a.iter().sum::<i32>().cmp(&b.iter().sum()).then_with(|| b.cmp(a)));
    pos
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use proptest::prelude::*;

    fn rs(f: Family, n: usize) -> RootSystem {
        RootSystem::new(CartanType::new(f, n).unwrap()).unwrap()
    }

    fn q(n: i64, d: i64) -> Q {
        Q::new(n, d)
    }

    fn all_types() -> Vec<RootSystem> {
        let mut v = Vec::new();
        for n in 1..=8 {
            v.push(rs(Family::A, n));
        }
        for n in 2..=7 {
            v.push(rs(Family::B, n));
        }
        for n in 3..=7 {
            v.push(rs(Family::C, n));
        }
        for n in 4..=8 {
            v.push(rs(Family::D, n));
        }
        for n in 6..=8 {
            v.push(rs(Family::E, n));
        }
        v
    }

    #[test]
    fn admissible_ranks() {
        assert!(CartanType::new(Family::A, 0).is_err());
        assert!(CartanType::new(Family::B, 1).is_err());
        assert!(CartanType::new(Family::C, 2).is_err());
        assert!(CartanType::new(Family::D, 3).is_err());
        assert!(CartanType::new(Family::E, 5).is_err());
        assert!(CartanType::new(Family::E, 9).is_err());
        assert!(CartanType::new(Family::E, 6).is_ok());
        assert!(CartanType::new(Family::D, 4).is_ok());
    }

    #[test]
    fn a1_data() {
        let r = rs(Family::A, 1);
        assert_eq!(r.cartan(), &[vec![2]]);
        assert_eq!(r.symmetrizer(), &[Q::one()]);
        assert_eq!(r.gram_fundamental(), &[vec![q(1, 2)]]);
    }

    #[test]
    fn a2_gram() {
        let r = rs(Family::A, 2);
        assert_eq!(
            r.gram_fundamental(),
            &[vec![q(2, 3), q(1, 3)], vec![q(1, 3), q(2, 3)]]
        );
        assert_eq!(r.inner(&r.fundamental(0), &r.fundamental(0)), q(2, 3));
    }

    #[test]
    fn a3_middle_weight_has_unit_length() {
        let r = rs(Family::A, 3);
        assert_eq!(r.inner(&r.fundamental(1), &r.fundamental(1)), Q::one());
    }

    #[test]
    fn d4_trivalent_node() {
        let r = rs(Family::D, 4);
        let a = r.cartan();
        let neighbours: Vec<usize> = (0..4).filter(|&j| j != 1 && a[1][j] != 0).collect();
        assert_eq!(neighbours, vec![0, 2, 3]);
        assert_eq!(a[1].iter().sum::<i32>(), -1);
        for i in [0, 2, 3] {
            assert_eq!(a[i].iter().sum::<i32>(), 1);
        }
    }

    #[test]
    fn bourbaki_e_diagram() {
        let a = rs(Family::E, 7).cartan().to_vec();
        let edges: Vec<(usize, usize)> = (0..7)
            .flat_map(|i| (i + 1..7).map(move |j| (i, j)))
            .filter(|&(i, j)| a[i][j] != 0)
            .collect();
        // 1-3, 2-4, 3-4, 4-5, 5-6, 6-7 in 1-based labels
        assert_eq!(edges, vec![(0, 2), (1, 3), (2, 3), (3, 4), (4, 5), (5, 6)]);
    }

    #[test]
    fn b2_spin_weight() {
        let r = rs(Family::B, 2);
        assert_eq!(r.cartan(), &[vec![2, -1], vec![-2, 2]]);
        assert_eq!(r.inner(&r.fundamental(1), &r.fundamental(1)), q(1, 2));
        assert_eq!(r.root_length_sq(0), q(2, 1));
        assert_eq!(r.root_length_sq(1), q(1, 1));
    }

    #[test]
    fn cartan_invariants() {
        for r in all_types() {
            let a = r.cartan();
            let n = r.rank();
            for i in 0..n {
                assert_eq!(a[i][i], 2);
                for j in 0..n {
                    if i != j {
                        assert!(a[i][j] <= 0);
                        assert_eq!(a[i][j] == 0, a[j][i] == 0);
                    }
                    assert_eq!(r.root_inner(i, j), r.root_inner(j, i), "{}", r.cartan_type());
                }
            }
            let max = (0..n).map(|i| r.root_length_sq(i)).max().unwrap();
            assert_eq!(max, q(2, 1));
            if r.is_simply_laced() {
                assert!(r.symmetrizer().iter().all(|d| d.is_one()));
                assert_eq!(r.common_root_length_sq(), Some(q(2, 1)));
            } else {
                assert_eq!(r.common_root_length_sq(), None);
            }
        }
    }

    #[test]
    fn symmetrized_cartan_is_positive_definite() {
        // Sylvester's criterion on leading principal minors.
        for r in all_types() {
            let n = r.rank();
            for k in 1..=n {
                let m: linalg::Matrix = (0..k)
                    .map(|i| (0..k).map(|j| r.root_inner(i, j)).collect())
                    .collect();
                assert!(determinant(m) > Q::zero(), "{} minor {k}", r.cartan_type());
            }
        }
    }

    fn determinant(mut m: linalg::Matrix) -> Q {
        let n = m.len();
        let mut det = Q::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else {
                return Q::zero();
            };
            if p != c {
                m.swap(p, c);
                det = -det;
            }
            det *= m[c][c];
            for r in c + 1..n {
                let f = m[r][c] / m[c][c];
                for k in c..n {
                    let v = m[c][k];
                    m[r][k] -= f * v;
                }
            }
        }
        det
    }

    #[test]
    fn fundamental_weights_are_dual_to_coroots() {
        for r in all_types() {
            let n = r.rank();
            for i in 0..n {
                for j in 0..n {
                    let pairing = r.inner(&r.fundamental(i), &r.simple_root(j)) / r.symmetrizer()[j];
                    let expected = if i == j { Q::one() } else { Q::zero() };
                    assert_eq!(pairing, expected, "{} ({i},{j})", r.cartan_type());
                }
            }
        }
    }

    #[test]
    fn gram_is_symmetric() {
        for r in all_types() {
            let g = r.gram_fundamental();
            assert_eq!(g.to_vec(), linalg::transpose(&g.to_vec()));
        }
    }

    #[test]
    fn reflection_examples() {
        let a1 = rs(Family::A, 1);
        assert_eq!(a1.simple_reflection(0, &a1.fundamental(0)).unwrap(), Weight(vec![-1]));
        let a2 = rs(Family::A, 2);
        assert_eq!(a2.simple_reflection(0, &a2.fundamental(0)).unwrap(), Weight(vec![-1, 1]));
        assert!(matches!(
            a2.simple_reflection(2, &a2.fundamental(0)),
            Err(Error::IndexOutOfRange { index: 2, rank: 2 })
        ));
        assert!(matches!(
            a2.simple_reflection(0, &Weight(vec![1])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn positive_root_counts() {
        let expected = |f: Family, n: usize| match f {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E => [36, 63, 120][n - 6],
        };
        for r in all_types() {
            let t = r.cartan_type();
            let want = expected(t.family(), t.rank());
            assert_eq!(r.positive_roots().len(), want, "{t}");
            assert_eq!(r.positive_coroots().len(), want, "{t}");
            assert_eq!(r.positive_coroot_values(&r.rho()).len(), want);
        }
    }

    #[test]
    fn coroot_value_examples() {
        let a2 = rs(Family::A, 2);
        let mut v = a2.positive_coroot_values(&a2.fundamental(0));
        v.sort();
        assert_eq!(v, vec![0, 1, 1]);
        let a1 = rs(Family::A, 1);
        assert_eq!(a1.positive_coroot_values(&Weight::zero(1)), vec![0]);
        assert_eq!(rs(Family::D, 4).positive_coroot_values(&Weight::zero(4)).len(), 12);
    }

    #[test]
    fn coroot_values_match_root_formula() {
        // (λ, β^∨) = 2(λ, β)/(β, β), with β built from simple roots
        for r in all_types() {
            let n = r.rank();
            let lam = r.rho();
            let mut from_roots: Vec<Q> = r
                .positive_roots()
                .iter()
                .map(|c| {
                    let beta = Weight(
                        (0..n)
                            .map(|k| (0..n).map(|j| r.cartan()[k][j] * c[j]).sum())
                            .collect(),
                    );
                    Q::from_integer(2) * r.inner(&lam, &beta) / r.inner(&beta, &beta)
                })
                .collect();
            let mut direct: Vec<Q> =
                r.positive_coroot_values(&lam).into_iter().map(|x| Q::from_integer(x as i64)).collect();
            from_roots.sort();
            direct.sort();
            assert_eq!(from_roots, direct, "{}", r.cartan_type());
        }
    }

    #[test]
    fn rho_is_half_sum_of_positive_roots() {
        for r in all_types() {
            let ones = vec![Q::one(); r.rank()];
            assert_eq!(r.half_sum_positive_roots(), ones, "{}", r.cartan_type());
        }
    }

    fn weight_strategy(n: usize) -> impl Strategy<Value = Weight> {
        proptest::collection::vec(-6i32..=6, n).prop_map(Weight)
    }

    fn type_strategy() -> impl Strategy<Value = RootSystem> {
        static TYPES: std::sync::OnceLock<Vec<RootSystem>> = std::sync::OnceLock::new();
        let types = TYPES.get_or_init(all_types);
        (0usize..types.len()).prop_map(move |k| types[k].clone())
    }

    proptest! {
        #[test]
        fn reflections_are_isometric_involutions(
            (r, mu, nu, i) in type_strategy().prop_flat_map(|r| {
                let n = r.rank();
                (Just(r), weight_strategy(n), weight_strategy(n), 0..n)
            })
        ) {
            let smu = r.simple_reflection(i, &mu).unwrap();
            let snu = r.simple_reflection(i, &nu).unwrap();
            prop_assert_eq!(r.inner(&smu, &snu), r.inner(&mu, &nu));
            prop_assert_eq!(r.simple_reflection(i, &smu).unwrap(), mu.clone());
            prop_assert_eq!(smu == mu, mu.coords()[i] == 0);
        }

        #[test]
        fn inner_is_symmetric_bilinear_and_positive(
            (r, mu, nu) in type_strategy().prop_flat_map(|r| {
                let n = r.rank();
                (Just(r), weight_strategy(n), weight_strategy(n))
            })
        ) {
            prop_assert_eq!(r.inner(&mu, &nu), r.inner(&nu, &mu));
            prop_assert_eq!(r.inner(&Weight::zero(r.rank()), &mu), Q::zero());
            let sum = Weight(mu.0.iter().zip(&nu.0).map(|(a, b)| a + b).collect());
            prop_assert_eq!(
                r.inner(&sum, &nu),
                r.inner(&mu, &nu) + r.inner(&nu, &nu)
            );
            if mu.0.iter().any(|&c| c != 0) {
                prop_assert!(r.inner(&mu, &mu) > Q::zero());
            }
        }
    }
}
