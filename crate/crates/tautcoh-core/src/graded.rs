//! ℤ-graded super vector spaces, at dimension level and at basis level.
//!
//! A [`GradedDim`] is a finitely supported vector of dimensions indexed by
//! cohomological degree. The ℤ/2-grading is degree parity, so the symmetric
//! power of [`GradedDim::sym_power`] is symmetric on even degrees and
//! exterior on odd degrees: for a single generator in degree `d`,
//!
//! * `d` even contributes the factor `1 / (1 - z t^d)`,
//! * `d` odd contributes the factor `1 + z t^d`
//!
//! to the generating series `sum_k dims(S^k) z^k` in `t`. The implementation
//! runs the corresponding recurrence generator by generator instead of
//! multiplying series, so every coefficient stays an exact `usize`.
//!
//! A [`BasisSpace`] is the same datum with named homogeneous basis elements,
//! and a [`SymMonomial`] is a canonical-form monomial in a super-symmetric
//! power of a basis: weakly increasing even indices, strictly increasing odd
//! indices, with the Koszul sign of the sort recorded on construction.

use core::fmt;

use alloc::borrow::ToOwned;
use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;

/// Dimensions of a ℤ-graded vector space, one entry per degree from 0 up.
///
/// Stored without trailing zeros, so two values compare equal exactly when
/// they agree in every degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GradedDim {
    dims: Vec<usize>,
}

impl GradedDim {
    /// The space with the given dimension in each degree.
    pub fn new(dims: impl Into<Vec<usize>>) -> Self {
        let mut dims = dims.into();
        while dims.last() == Some(&0) {
            dims.pop();
        }
        GradedDim { dims }
    }

    /// The zero space.
    pub fn zero() -> Self {
        GradedDim { dims: Vec::new() }
    }

    /// The ground field in degree 0.
    pub fn scalar() -> Self {
        GradedDim { dims: vec![1] }
    }

    /// Dimension in one degree (0 beyond the support).
    pub fn dim(&self, degree: usize) -> usize {
        self.dims.get(degree).copied().unwrap_or(0)
    }

    /// The dimension vector, without trailing zeros.
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Dimension vector padded with zeros up to length `len` (longer if the
    /// support demands it). Convenient for aligned tabular output.
    pub fn padded(&self, len: usize) -> Vec<usize> {
        let mut out = self.dims.clone();
        if out.len() < len {
            out.resize(len, 0);
        }
        out
    }

    /// Largest degree with nonzero dimension, `None` for the zero space.
    pub fn max_degree(&self) -> Option<usize> {
        self.dims.len().checked_sub(1)
    }

    /// Total dimension over all degrees.
    pub fn total(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dims.is_empty()
    }

    /// True when the support lies in degrees `0..=max_degree`.
    pub fn supported_within(&self, max_degree: usize) -> bool {
        match self.max_degree() {
            Some(top) => top <= max_degree,
            None => true,
        }
    }

    /// The same space with every degree raised by `by`.
    pub fn shift(&self, by: usize) -> Self {
        if self.dims.is_empty() {
            return GradedDim::zero();
        }
        let mut dims = vec![0; by + self.dims.len()];
        dims[by..].copy_from_slice(&self.dims);
        GradedDim { dims }
    }

    /// Direct sum: pointwise addition.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let len = self.dims.len().max(other.dims.len());
        let dims = (0..len).map(|i| self.dim(i) + other.dim(i)).collect();
        GradedDim::new_unchecked(dims)
    }

    /// Tensor product: convolution of dimension vectors (Künneth).
    pub fn tensor(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return GradedDim::zero();
        }
        let mut dims = vec![0; self.dims.len() + other.dims.len() - 1];
        for (i, a) in self.dims.iter().enumerate() {
            for (j, b) in other.dims.iter().enumerate() {
                dims[i + j] += a * b;
            }
        }
        GradedDim::new_unchecked(dims)
    }

    /// `k`-th super-symmetric power: symmetric algebra on even degrees,
    /// exterior algebra on odd degrees.
    ///
    /// `sym_power(0)` is the ground field, even for the zero space.
    pub fn sym_power(&self, k: usize) -> Self {
        // table[j] accumulates S^j of the generators consumed so far.
        let mut table: Vec<Vec<usize>> = vec![Vec::new(); k + 1];
        table[0] = vec![1];
        for (degree, &count) in self.dims.iter().enumerate() {
            for _ in 0..count {
                if degree % 2 == 0 {
                    // In-place ascending update folds in the whole geometric
                    // series of the generator: new[j] = old[j] + new[j-1]<<d.
                    for j in 1..=k {
                        let shifted = shifted_copy(&table[j - 1], degree);
                        add_into(&mut table[j], &shifted);
                    }
                } else {
                    // Exterior generator: descending update so each j sees
                    // the previous generation's j-1 exactly once.
                    for j in (1..=k).rev() {
                        let shifted = shifted_copy(&table[j - 1], degree);
                        add_into(&mut table[j], &shifted);
                    }
                }
            }
        }
        GradedDim::new(table.swap_remove(k))
    }

    /// Pointwise difference `self - other`, the dimensions of a quotient by
    /// a degreewise subspace.
    pub fn quotient(&self, other: &Self) -> Result<Self, Error> {
        let len = self.dims.len().max(other.dims.len());
        let mut dims = vec![0; len];
        for (degree, slot) in dims.iter_mut().enumerate() {
            let (m, s) = (self.dim(degree), other.dim(degree));
            *slot = m.checked_sub(s).ok_or(Error::NegativeQuotient {
                degree,
                minuend: m,
                subtrahend: s,
            })?;
        }
        Ok(GradedDim::new(dims))
    }

    /// Euler characteristic: alternating sum of dimensions.
    pub fn euler_char(&self) -> i64 {
        self.dims
            .iter()
            .enumerate()
            .map(|(degree, &d)| if degree % 2 == 0 { d as i64 } else { -(d as i64) })
            .sum()
    }

    fn new_unchecked(dims: Vec<usize>) -> Self {
        debug_assert!(dims.last() != Some(&0));
        GradedDim { dims }
    }
}

impl From<Vec<usize>> for GradedDim {
    fn from(dims: Vec<usize>) -> Self {
        GradedDim::new(dims)
    }
}

impl From<&[usize]> for GradedDim {
    fn from(dims: &[usize]) -> Self {
        GradedDim::new(dims.to_owned())
    }
}

impl fmt::Display for GradedDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, d) in self.dims.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, "]")
    }
}

fn shifted_copy(poly: &[usize], by: usize) -> Vec<usize> {
    if poly.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; by + poly.len()];
    out[by..].copy_from_slice(poly);
    out
}

fn add_into(acc: &mut Vec<usize>, other: &[usize]) {
    if acc.len() < other.len() {
        acc.resize(other.len(), 0);
    }
    for (a, b) in acc.iter_mut().zip(other) {
        *a += b;
    }
}

/// One named homogeneous basis vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisElement {
    pub label: String,
    pub degree: usize,
}

/// An explicit homogeneous basis: ordered, distinctly labeled elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisSpace {
    elements: Vec<BasisElement>,
}

impl BasisSpace {
    /// Builds a basis from `(label, degree)` pairs. Labels must be distinct.
    pub fn new(elements: Vec<(String, usize)>) -> Result<Self, Error> {
        let mut seen = BTreeSet::new();
        for (label, _) in &elements {
            if !seen.insert(label.clone()) {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        Ok(BasisSpace {
            elements: elements
                .into_iter()
                .map(|(label, degree)| BasisElement { label, degree })
                .collect(),
        })
    }

    /// Basis concentrated in degree 0, one element per label.
    pub fn in_degree_zero(labels: Vec<String>) -> Result<Self, Error> {
        BasisSpace::new(labels.into_iter().map(|l| (l, 0)).collect())
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn element(&self, index: usize) -> &BasisElement {
        &self.elements[index]
    }

    pub fn iter(&self) -> impl Iterator<Item = &BasisElement> {
        self.elements.iter()
    }

    /// Dimension vector of the spanned space.
    pub fn dims(&self) -> GradedDim {
        let mut dims = Vec::new();
        for e in &self.elements {
            if dims.len() <= e.degree {
                dims.resize(e.degree + 1, 0);
            }
            dims[e.degree] += 1;
        }
        GradedDim::new(dims)
    }

    /// True when every element sits in degree 0.
    pub fn is_degree_zero(&self) -> bool {
        self.elements.iter().all(|e| e.degree == 0)
    }
}

/// A monomial in a super-symmetric power of a [`BasisSpace`], in canonical
/// form: even-degree factor indices weakly increasing, odd-degree factor
/// indices strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymMonomial {
    even: Vec<usize>,
    odd: Vec<usize>,
    degree: usize,
}

impl SymMonomial {
    /// Canonicalizes a product of basis vectors given by index.
    ///
    /// Returns the sorted monomial together with the Koszul sign picked up
    /// by the sort (a transposition of two odd factors costs a sign), or
    /// `None` when an odd factor repeats and the product vanishes.
    pub fn from_indices(basis: &BasisSpace, indices: &[usize]) -> Option<(Self, i8)> {
        let mut even = Vec::new();
        let mut odd = Vec::new();
        // Sign of the permutation sorting the odd subsequence: odd factors
        // anticommute with each other and commute with everything even.
        let mut sign = 1i8;
        for &idx in indices {
            if basis.element(idx).degree.is_multiple_of(2) {
                even.push(idx);
            } else {
                for &prev in odd.iter().rev() {
                    if prev > idx {
                        sign = -sign;
                    } else if prev == idx {
                        return None;
                    }
                }
                odd.push(idx);
            }
        }
        even.sort_unstable();
        odd.sort_unstable();
        let degree = indices.iter().map(|&i| basis.element(i).degree).sum();
        Some((SymMonomial { even, odd, degree }, sign))
    }

    /// Cohomological degree (sum of the factors' degrees).
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Number of factors.
    pub fn size(&self) -> usize {
        self.even.len() + self.odd.len()
    }

    /// All factor indices, merged and sorted.
    pub fn indices(&self) -> Vec<usize> {
        let mut all: Vec<usize> = self.even.iter().chain(&self.odd).copied().collect();
        all.sort_unstable();
        all
    }

    /// The monomial with the factor at `position` (into [`Self::indices`])
    /// removed, and the Koszul sign of pulling that factor out to the left
    /// past everything before it.
    pub fn without_factor(&self, basis: &BasisSpace, position: usize) -> (Self, i8) {
        let mut indices = self.indices();
        let removed = indices.remove(position);
        // Only odd-past-odd moves cost a sign.
        let sign = if basis.element(removed).degree % 2 == 1 {
            let odd_before = indices[..position]
                .iter()
                .filter(|&&i| basis.element(i).degree % 2 == 1)
                .count();
            if odd_before % 2 == 0 {
                1
            } else {
                -1
            }
        } else {
            1
        };
        let (monomial, canonical_sign) =
            SymMonomial::from_indices(basis, &indices).expect("factors of a canonical monomial");
        debug_assert_eq!(canonical_sign, 1, "a subsequence of a sorted sequence stays sorted");
        (monomial, sign)
    }

    /// Human-readable label, grouping repeated factors into powers.
    /// The empty monomial renders as `"1"`.
    pub fn label(&self, basis: &BasisSpace) -> String {
        use core::fmt::Write;
        let indices = self.indices();
        if indices.is_empty() {
            return String::from("1");
        }
        let mut out = String::new();
        let mut run_start = 0;
        for i in 0..=indices.len() {
            if i == indices.len() || indices[i] != indices[run_start] {
                if !out.is_empty() {
                    out.push('*');
                }
                let run = i - run_start;
                let label = &basis.element(indices[run_start]).label;
                if run == 1 {
                    out.push_str(label);
                } else {
                    let _ = write!(out, "{label}^{run}");
                }
                run_start = i;
            }
        }
        out
    }
}

/// All canonical monomials of `k` factors from `basis`, in lexicographic
/// order of their weakly increasing index sequences. Odd factors never
/// repeat, so the count in each degree is the super-symmetric power.
pub fn enumerate_sym_basis(basis: &BasisSpace, k: usize) -> Vec<SymMonomial> {
    let mut out = Vec::new();
    let mut stack = Vec::with_capacity(k);
    enumerate_rec(basis, k, 0, &mut stack, &mut out);
    out
}

fn enumerate_rec(
    basis: &BasisSpace,
    k: usize,
    from: usize,
    stack: &mut Vec<usize>,
    out: &mut Vec<SymMonomial>,
) {
    if stack.len() == k {
        let (monomial, sign) =
            SymMonomial::from_indices(basis, stack).expect("odd repeats are never pushed");
        debug_assert_eq!(sign, 1, "weakly increasing sequences are canonical");
        out.push(monomial);
        return;
    }
    for idx in from..basis.len() {
        let odd = basis.element(idx).degree % 2 == 1;
        if odd && stack.last() == Some(&idx) {
            continue;
        }
        stack.push(idx);
        enumerate_rec(basis, k, idx, stack, out);
        stack.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gd(dims: &[usize]) -> GradedDim {
        GradedDim::from(dims)
    }

    #[test]
    fn normalization_strips_trailing_zeros() {
        assert_eq!(gd(&[1, 0, 1, 0, 0]), gd(&[1, 0, 1]));
        assert_eq!(gd(&[0, 0]), GradedDim::zero());
        assert_eq!(gd(&[1, 0, 1]).dims(), &[1, 0, 1]);
        assert_eq!(gd(&[]).max_degree(), None);
        assert_eq!(gd(&[0, 3]).max_degree(), Some(1));
    }

    #[test]
    fn direct_sum_is_pointwise() {
        assert_eq!(gd(&[1, 0, 1]).direct_sum(&gd(&[0, 2])), gd(&[1, 2, 1]));
        assert_eq!(gd(&[3]).direct_sum(&gd(&[0, 0, 5])), gd(&[3, 0, 5]));
        assert_eq!(GradedDim::zero().direct_sum(&GradedDim::zero()), GradedDim::zero());
    }

    #[test]
    fn tensor_is_convolution() {
        assert_eq!(gd(&[1, 0, 1]).tensor(&gd(&[2])), gd(&[2, 0, 2]));
        assert_eq!(gd(&[1, 1]).tensor(&gd(&[1, 1])), gd(&[1, 2, 1]));
        assert_eq!(gd(&[1, 2]).tensor(&GradedDim::zero()), GradedDim::zero());
    }

    #[test]
    fn sym_power_k3_square() {
        // One even generator in degree 0 and one in degree 2:
        // S^2 has basis x^2, xy, y^2 in degrees 0, 2, 4.
        assert_eq!(gd(&[1, 0, 1]).sym_power(2), gd(&[1, 0, 1, 0, 1]));
    }

    #[test]
    fn sym_power_on_odd_generators_is_exterior() {
        // Two odd generators in degree 1: S^2 = Λ^2 is one dimensional in
        // degree 2, S^3 = 0.
        assert_eq!(gd(&[0, 2]).sym_power(2), gd(&[0, 0, 1]));
        assert_eq!(gd(&[0, 2]).sym_power(3), GradedDim::zero());
    }

    #[test]
    fn sym_power_zero_is_scalar() {
        assert_eq!(gd(&[0, 5, 3]).sym_power(0), GradedDim::scalar());
        assert_eq!(GradedDim::zero().sym_power(0), GradedDim::scalar());
        assert_eq!(GradedDim::zero().sym_power(2), GradedDim::zero());
    }

    #[test]
    fn sym_power_totals_are_binomials() {
        // d even generators: multichoose(d, k); d odd generators: choose(d, k).
        let choose = |n: usize, k: usize| -> usize {
            if k > n {
                return 0;
            }
            (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
        };
        for d in 0..6 {
            for k in 0..5 {
                assert_eq!(gd(&[d]).sym_power(k).total(), choose(d + k.saturating_sub(1), k));
                assert_eq!(gd(&[0, d]).sym_power(k).total(), choose(d, k));
            }
        }
    }

    #[test]
    fn quotient_subtracts_or_fails() {
        assert_eq!(gd(&[2, 1, 3]).quotient(&gd(&[1, 1])).unwrap(), gd(&[1, 0, 3]));
        assert_eq!(
            gd(&[1]).quotient(&gd(&[0, 1])),
            Err(Error::NegativeQuotient { degree: 1, minuend: 0, subtrahend: 1 })
        );
    }

    #[test]
    fn euler_char_examples() {
        assert_eq!(gd(&[1, 0, 1]).euler_char(), 2);
        assert_eq!(gd(&[1, 2, 1]).euler_char(), 0);
        assert_eq!(gd(&[0, 3]).euler_char(), -3);
        assert_eq!(GradedDim::zero().euler_char(), 0);
    }

    #[test]
    fn euler_char_of_sym_matches_binomial_series() {
        // sum_k chi(S^k a) z^k = (1 - z)^(-chi(a)): compare coefficient by
        // coefficient against an independent expansion of the right side.
        let binom_series = |chi: i64, k: usize| -> i64 {
            // coefficient of z^k in (1 - z)^(-chi) = multichoose(chi, k)
            // with the usual signed extension for negative chi.
            let mut num = 1i64;
            let mut den = 1i64;
            for i in 0..k as i64 {
                num *= chi + i;
                den *= i + 1;
            }
            num / den
        };
        for dims in [&[1, 0, 1][..], &[1, 2, 1], &[0, 3], &[2, 1], &[1, 4, 2]] {
            let a = gd(dims);
            for k in 0..6 {
                assert_eq!(
                    a.sym_power(k).euler_char(),
                    binom_series(a.euler_char(), k),
                    "dims {:?} k {}",
                    dims,
                    k
                );
            }
        }
    }

    #[test]
    fn shift_moves_degrees_up() {
        assert_eq!(gd(&[1, 2]).shift(2), gd(&[0, 0, 1, 2]));
        assert_eq!(GradedDim::zero().shift(3), GradedDim::zero());
    }

    #[test]
    fn display_is_bracketed_list() {
        assert_eq!(alloc::format!("{}", gd(&[1, 0, 26])), "[1, 0, 26]");
        assert_eq!(alloc::format!("{}", GradedDim::zero()), "[]");
    }

    fn basis(degrees: &[usize]) -> BasisSpace {
        BasisSpace::new(
            degrees
                .iter()
                .enumerate()
                .map(|(i, &d)| (alloc::format!("e{i}"), d))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn basis_rejects_duplicate_labels() {
        let err = BasisSpace::new(vec![("x".into(), 0), ("x".into(), 1)]).unwrap_err();
        assert_eq!(err, Error::DuplicateLabel("x".into()));
    }

    #[test]
    fn basis_dims_counts_by_degree() {
        assert_eq!(basis(&[0, 2, 0, 1]).dims(), gd(&[2, 1, 1]));
    }

    #[test]
    fn koszul_sign_of_odd_transposition() {
        let b = basis(&[1, 1, 0]);
        let (m, sign) = SymMonomial::from_indices(&b, &[1, 0]).unwrap();
        assert_eq!(sign, -1);
        assert_eq!(m.indices(), vec![0, 1]);
        // Even factors move freely.
        let (_, sign) = SymMonomial::from_indices(&b, &[2, 0]).unwrap();
        assert_eq!(sign, 1);
        let (_, sign) = SymMonomial::from_indices(&b, &[1, 2, 0]).unwrap();
        assert_eq!(sign, -1);
    }

    #[test]
    fn odd_square_vanishes() {
        let b = basis(&[1, 1]);
        assert_eq!(SymMonomial::from_indices(&b, &[0, 0]), None);
        assert_eq!(SymMonomial::from_indices(&b, &[1, 0, 1]), None);
    }

    #[test]
    fn three_odd_factors_reverse_is_odd_permutation() {
        let b = basis(&[1, 1, 1]);
        // Reversal of three elements has three inversions.
        let (_, sign) = SymMonomial::from_indices(&b, &[2, 1, 0]).unwrap();
        assert_eq!(sign, -1);
        // One inversion.
        let (_, sign) = SymMonomial::from_indices(&b, &[0, 2, 1]).unwrap();
        assert_eq!(sign, -1);
    }

    #[test]
    fn monomial_labels_group_powers() {
        let b = BasisSpace::in_degree_zero(vec!["U".into(), "V".into()]).unwrap();
        let (m, _) = SymMonomial::from_indices(&b, &[0, 1, 0]).unwrap();
        assert_eq!(m.label(&b), "U^2*V");
        let (empty, _) = SymMonomial::from_indices(&b, &[]).unwrap();
        assert_eq!(empty.label(&b), "1");
    }

    #[test]
    fn without_factor_removes_one_copy() {
        let b = BasisSpace::in_degree_zero(vec!["U".into(), "V".into()]).unwrap();
        let (m, _) = SymMonomial::from_indices(&b, &[0, 0, 1]).unwrap();
        let (m1, sign) = m.without_factor(&b, 0);
        assert_eq!(sign, 1);
        assert_eq!(m1.indices(), vec![0, 1]);
        let (m2, _) = m.without_factor(&b, 2);
        assert_eq!(m2.indices(), vec![0, 0]);
    }

    #[test]
    fn enumeration_order_is_lexicographic() {
        let b = basis(&[0, 1]);
        let monos = enumerate_sym_basis(&b, 2);
        let seqs: Vec<Vec<usize>> = monos.iter().map(|m| m.indices()).collect();
        // e0 even (repeats allowed), e1 odd (no square).
        assert_eq!(seqs, vec![vec![0, 0], vec![0, 1]]);
    }

    #[test]
    fn enumeration_counts_match_sym_power_by_degree() {
        // The enumeration is the independent route: counting canonical
        // monomials degree by degree must reproduce sym_power.
        for degrees in [&[0, 0, 1][..], &[1, 1, 2], &[0, 1, 2, 3], &[2, 2], &[1, 1, 1, 1]] {
            let b = basis(degrees);
            for k in 0..=4 {
                let monos = enumerate_sym_basis(&b, k);
                let mut counted = Vec::new();
                for m in &monos {
                    if counted.len() <= m.degree() {
                        counted.resize(m.degree() + 1, 0);
                    }
                    counted[m.degree()] += 1;
                }
                assert_eq!(
                    GradedDim::new(counted),
                    b.dims().sym_power(k),
                    "degrees {:?} k {}",
                    degrees,
                    k
                );
            }
        }
    }

    proptest! {
        #[test]
        fn tensor_commutes(a in proptest::collection::vec(0usize..5, 0..5),
                           b in proptest::collection::vec(0usize..5, 0..5)) {
            let (a, b) = (GradedDim::new(a), GradedDim::new(b));
            prop_assert_eq!(a.tensor(&b), b.tensor(&a));
        }

        #[test]
        fn tensor_associates(a in proptest::collection::vec(0usize..4, 0..4),
                             b in proptest::collection::vec(0usize..4, 0..4),
                             c in proptest::collection::vec(0usize..4, 0..4)) {
            let (a, b, c) = (GradedDim::new(a), GradedDim::new(b), GradedDim::new(c));
            prop_assert_eq!(a.tensor(&b).tensor(&c), a.tensor(&b.tensor(&c)));
        }

        #[test]
        fn euler_char_is_multiplicative_and_additive(
            a in proptest::collection::vec(0usize..5, 0..6),
            b in proptest::collection::vec(0usize..5, 0..6),
        ) {
            let (a, b) = (GradedDim::new(a), GradedDim::new(b));
            prop_assert_eq!(a.tensor(&b).euler_char(), a.euler_char() * b.euler_char());
            prop_assert_eq!(a.direct_sum(&b).euler_char(), a.euler_char() + b.euler_char());
        }

        #[test]
        fn sym_power_one_is_identity(a in proptest::collection::vec(0usize..6, 0..6)) {
            let a = GradedDim::new(a);
            prop_assert_eq!(a.sym_power(1), a);
        }

        #[test]
        fn quotient_then_sum_round_trips(
            a in proptest::collection::vec(0usize..5, 0..6),
            b in proptest::collection::vec(0usize..5, 0..6),
        ) {
            let (a, b) = (GradedDim::new(a), GradedDim::new(b));
            let sum = a.direct_sum(&b);
            prop_assert_eq!(sum.quotient(&b).unwrap(), a);
        }
    }
}
