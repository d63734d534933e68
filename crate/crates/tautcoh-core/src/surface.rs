//! Surface input data: cohomology of the structure sheaf and of the line
//! bundles a query needs, plus (where available) explicit section bases and
//! multiplication tables.
//!
//! Two sources of data ship here. Presets pin `H*(O)` to standard Hodge
//! numbers and take the remaining dimension vectors as input. The ℙ² model
//! is exact and self-contained: `H*(ℙ², O(d))` by closed formula, monomial
//! bases of `H⁰` in the coordinates `U, V, W`, and the literal monomial
//! multiplication `H⁰(O(a)) ⊗ H⁰(O(b)) → H⁰(O(a+b))`.
//!
//! Monomials of degree `d` are ordered by exponent vectors `(i, j, k)`,
//! `i + j + k = d`, lexicographically descending. All orders here are
//! deterministic so downstream matrices are reproducible.

use core::fmt;

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::Error;
use crate::graded::{BasisSpace, GradedDim};
use crate::linalg::{Rational, RationalMatrix};

/// The bundle slots a query may address on a surface.
///
/// `O` is the structure sheaf, `L` the main line bundle, `A` the auxiliary
/// twist; composite slots name the tensor products a decomposition consumes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[allow(clippy::upper_case_acronyms)]
pub enum Slot {
    O,
    L,
    L2,
    A,
    LA,
    L2A,
    L2A2,
}

impl Slot {
    pub const ALL: [Slot; 7] =
        [Slot::O, Slot::L, Slot::L2, Slot::A, Slot::LA, Slot::L2A, Slot::L2A2];

    pub fn as_str(self) -> &'static str {
        match self {
            Slot::O => "O",
            Slot::L => "L",
            Slot::L2 => "L2",
            Slot::A => "A",
            Slot::LA => "LA",
            Slot::L2A => "L2A",
            Slot::L2A2 => "L2A2",
        }
    }

    pub fn parse(s: &str) -> Option<Slot> {
        Slot::ALL.into_iter().find(|slot| slot.as_str() == s)
    }
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Cohomology data of one line bundle: graded dimensions supported in
/// degrees 0..=2, and optionally an explicit basis of `H⁰`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineBundleData {
    name: String,
    h: GradedDim,
    basis: Option<BasisSpace>,
}

impl LineBundleData {
    pub fn new(name: impl Into<String>, h: GradedDim) -> Result<Self, Error> {
        if !h.supported_within(2) {
            return Err(Error::BadDegreeSupport { what: "line bundle cohomology", max_degree: 2 });
        }
        Ok(LineBundleData { name: name.into(), h, basis: None })
    }

    /// Attaches an `H⁰` basis; its size must be `h⁰` and all its elements
    /// must sit in degree 0.
    pub fn with_basis(
        name: impl Into<String>,
        h: GradedDim,
        basis: BasisSpace,
    ) -> Result<Self, Error> {
        let mut data = LineBundleData::new(name, h)?;
        if !basis.is_degree_zero() {
            return Err(Error::BadDegreeSupport { what: "section basis", max_degree: 0 });
        }
        if basis.len() != data.h.dim(0) {
            return Err(Error::DimensionMismatch {
                what: "section basis vs h0",
                expected: data.h.dim(0),
                got: basis.len(),
            });
        }
        data.basis = Some(basis);
        Ok(data)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn h(&self) -> &GradedDim {
        &self.h
    }

    pub fn h0(&self) -> usize {
        self.h.dim(0)
    }

    pub fn basis(&self) -> Option<&BasisSpace> {
        self.basis.as_ref()
    }
}

/// Structure constants of a bilinear multiplication `left ⊗ right → target`
/// in fixed bases, stored densely: `coeffs[(i * |right| + j) * |target| + t]`
/// is the `t`-th coordinate of the product of `left[i]` and `right[j]`.
#[derive(Debug, Clone, PartialEq)]
pub struct MultTable {
    left: BasisSpace,
    right: BasisSpace,
    target: BasisSpace,
    coeffs: Vec<Rational>,
}

impl MultTable {
    pub fn new(
        left: BasisSpace,
        right: BasisSpace,
        target: BasisSpace,
        coeffs: Vec<Rational>,
    ) -> Result<Self, Error> {
        let expected = left.len() * right.len() * target.len();
        if coeffs.len() != expected {
            return Err(Error::DimensionMismatch {
                what: "multiplication table coefficients",
                expected,
                got: coeffs.len(),
            });
        }
        Ok(MultTable { left, right, target, coeffs })
    }

    pub fn left(&self) -> &BasisSpace {
        &self.left
    }

    pub fn right(&self) -> &BasisSpace {
        &self.right
    }

    pub fn target(&self) -> &BasisSpace {
        &self.target
    }

    /// Coordinates of `left[i] * right[j]` in the target basis.
    pub fn product(&self, i: usize, j: usize) -> &[Rational] {
        let t = self.target.len();
        let start = (i * self.right.len() + j) * t;
        &self.coeffs[start..start + t]
    }

    /// Bilinear extension to coordinate vectors.
    pub fn apply(&self, u: &[Rational], w: &[Rational]) -> Vec<Rational> {
        assert_eq!(u.len(), self.left.len(), "left coordinate length");
        assert_eq!(w.len(), self.right.len(), "right coordinate length");
        let mut out = vec![Rational::zero(); self.target.len()];
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in w.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (t, c) in self.product(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        out[t] += &ab * c;
                    }
                }
            }
        }
        out
    }

    /// The multiplication flattened to a matrix `|target| × (|left|·|right|)`
    /// with column index `i * |right| + j`. Its rank is the dimension of the
    /// image of the multiplication.
    pub fn as_matrix(&self) -> RationalMatrix {
        let mut m = RationalMatrix::zeros(self.target.len(), self.left.len() * self.right.len());
        for i in 0..self.left.len() {
            for j in 0..self.right.len() {
                for (t, c) in self.product(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        m.set(t, i * self.right.len() + j, c.clone());
                    }
                }
            }
        }
        m
    }
}

/// One registered multiplication between bundle slots.
#[derive(Debug, Clone, PartialEq)]
pub struct MultEntry {
    pub left: Slot,
    pub right: Slot,
    pub target: Slot,
    pub table: MultTable,
}

/// A surface, for the purposes of this crate: a name, cohomology data per
/// bundle slot, and whatever multiplication tables are known.
///
/// Slot `O` is always present with `h⁰ = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct SurfaceData {
    name: String,
    bundles: BTreeMap<Slot, LineBundleData>,
    mults: Vec<MultEntry>,
}

impl SurfaceData {
    pub fn new(name: impl Into<String>, structure_sheaf: LineBundleData) -> Result<Self, Error> {
        Self::check_structure_sheaf(&structure_sheaf)?;
        let mut bundles = BTreeMap::new();
        bundles.insert(Slot::O, structure_sheaf);
        Ok(SurfaceData { name: name.into(), bundles, mults: Vec::new() })
    }

    fn check_structure_sheaf(data: &LineBundleData) -> Result<(), Error> {
        if data.h0() != 1 {
            return Err(Error::InvalidDims {
                what: "structure sheaf",
                detail: format!("h0 must be 1, got {}", data.h0()),
            });
        }
        Ok(())
    }

    /// Adds or replaces the bundle in `slot`.
    pub fn insert_bundle(&mut self, slot: Slot, data: LineBundleData) -> Result<(), Error> {
        if slot == Slot::O {
            Self::check_structure_sheaf(&data)?;
        }
        self.bundles.insert(slot, data);
        Ok(())
    }

    /// Registers a multiplication table. All three slots must already carry
    /// bases equal to the table's.
    pub fn add_mult(
        &mut self,
        left: Slot,
        right: Slot,
        target: Slot,
        table: MultTable,
    ) -> Result<(), Error> {
        for (slot, table_basis) in
            [(left, table.left()), (right, table.right()), (target, table.target())]
        {
            let slot_basis = self.basis(slot)?;
            if slot_basis != table_basis {
                return Err(Error::BasisMismatch("table basis differs from slot basis"));
            }
        }
        self.mults.retain(|m| (m.left, m.right, m.target) != (left, right, target));
        self.mults.push(MultEntry { left, right, target, table });
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn has_slot(&self, slot: Slot) -> bool {
        self.bundles.contains_key(&slot)
    }

    pub fn bundle(&self, slot: Slot) -> Result<&LineBundleData, Error> {
        self.bundles.get(&slot).ok_or(Error::MissingSlot(slot))
    }

    pub fn dims(&self, slot: Slot) -> Result<&GradedDim, Error> {
        Ok(self.bundle(slot)?.h())
    }

    pub fn basis(&self, slot: Slot) -> Result<&BasisSpace, Error> {
        self.bundle(slot)?.basis().ok_or(Error::MissingBasis(slot))
    }

    pub fn mult(&self, left: Slot, right: Slot, target: Slot) -> Result<&MultTable, Error> {
        self.mults
            .iter()
            .find(|m| (m.left, m.right, m.target) == (left, right, target))
            .map(|m| &m.table)
            .ok_or(Error::MissingMultTable { left, right, target })
    }

    /// Slots present, in fixed order.
    pub fn slots(&self) -> impl Iterator<Item = Slot> + '_ {
        self.bundles.keys().copied()
    }
}

/// Preset surfaces, identified by the Hodge numbers of their structure
/// sheaf. `Custom` takes `H*(O)` from the caller instead.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preset {
    /// Rational surface with `q = p_g = 0`: `H*(O) = [1]`.
    RationalQpg0,
    /// K3: `H*(O) = [1, 0, 1]`.
    K3,
    /// Abelian: `H*(O) = [1, 2, 1]`.
    Abelian,
    Custom,
}

impl Preset {
    pub fn parse(s: &str) -> Option<Preset> {
        match s {
            "rational_qpg0" => Some(Preset::RationalQpg0),
            "K3" => Some(Preset::K3),
            "abelian" => Some(Preset::Abelian),
            "custom" => Some(Preset::Custom),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Preset::RationalQpg0 => "rational_qpg0",
            Preset::K3 => "K3",
            Preset::Abelian => "abelian",
            Preset::Custom => "custom",
        }
    }

    fn structure_dims(self) -> Option<GradedDim> {
        match self {
            Preset::RationalQpg0 => Some(GradedDim::new(vec![1])),
            Preset::K3 => Some(GradedDim::new(vec![1, 0, 1])),
            Preset::Abelian => Some(GradedDim::new(vec![1, 2, 1])),
            Preset::Custom => None,
        }
    }
}

/// Builds a surface from a preset plus dimension vectors per slot.
///
/// For named presets, `H*(O)` is pinned by the preset; supplying slot `O`
/// with different dims is an error. `Custom` requires slot `O`.
pub fn preset_surface(
    preset: Preset,
    bundle_dims: &BTreeMap<Slot, GradedDim>,
) -> Result<SurfaceData, Error> {
    let h_o = match preset.structure_dims() {
        Some(pinned) => {
            if let Some(given) = bundle_dims.get(&Slot::O) {
                if *given != pinned {
                    return Err(Error::InvalidDims {
                        what: "structure sheaf",
                        detail: format!(
                            "preset {} pins H*(O) = {pinned}, config says {given}",
                            preset.name()
                        ),
                    });
                }
            }
            pinned
        }
        None => bundle_dims.get(&Slot::O).cloned().ok_or(Error::MissingSlot(Slot::O))?,
    };
    let mut surface = SurfaceData::new(preset.name(), LineBundleData::new("O", h_o)?)?;
    for (&slot, dims) in bundle_dims {
        if slot == Slot::O {
            continue;
        }
        surface.insert_bundle(slot, LineBundleData::new(slot.as_str(), dims.clone())?)?;
    }
    Ok(surface)
}

fn binomial(n: i64, k: i64) -> usize {
    if n < 0 || k < 0 || k > n {
        return 0;
    }
    let mut acc: i64 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc as usize
}

/// `H*(ℙ², O(d))`: `h⁰ = C(d+2, 2)`, `h¹ = 0`, `h² = C(-d-1, 2)`.
pub fn p2_cohomology(d: i64) -> GradedDim {
    GradedDim::new(vec![binomial(d + 2, 2), 0, binomial(-d - 1, 2)])
}

/// Exponent vectors `(i, j, k)` with `i + j + k = d`, lexicographically
/// descending; empty for `d < 0`.
fn p2_exponents(d: i64) -> Vec<(i64, i64, i64)> {
    let mut out = Vec::new();
    if d < 0 {
        return out;
    }
    for i in (0..=d).rev() {
        for j in (0..=d - i).rev() {
            out.push((i, j, d - i - j));
        }
    }
    out
}

fn monomial_label(e: (i64, i64, i64)) -> String {
    let mut parts = Vec::new();
    for (var, exp) in [("U", e.0), ("V", e.1), ("W", e.2)] {
        match exp {
            0 => {}
            1 => parts.push(var.to_string()),
            _ => parts.push(format!("{var}^{exp}")),
        }
    }
    if parts.is_empty() {
        return "1".to_string();
    }
    parts.join("*")
}

/// Monomial basis of `H⁰(ℙ², O(d))` in the order of [`p2_exponents`].
pub fn p2_basis(d: i64) -> BasisSpace {
    BasisSpace::in_degree_zero(p2_exponents(d).into_iter().map(monomial_label).collect())
        .expect("monomial labels of distinct exponents are distinct")
}

/// `O(d)` on ℙ², with its monomial `H⁰` basis when `d ≥ 0`.
pub fn p2_line_bundle(d: i64) -> LineBundleData {
    let name = format!("O({d})");
    let h = p2_cohomology(d);
    if d >= 0 {
        LineBundleData::with_basis(name, h, p2_basis(d))
            .expect("monomial basis matches h0 by construction")
    } else {
        LineBundleData::new(name, h).expect("p2 cohomology sits in degrees 0..=2")
    }
}

/// Monomial multiplication `H⁰(O(a)) ⊗ H⁰(O(b)) → H⁰(O(a+b))` on ℙ²:
/// every structure constant is 0 or 1, exponents simply add.
pub fn p2_mult_table(a: i64, b: i64) -> MultTable {
    assert!(a >= 0 && b >= 0, "monomial multiplication needs a, b >= 0");
    let left_exp = p2_exponents(a);
    let right_exp = p2_exponents(b);
    let target_exp = p2_exponents(a + b);
    let index: BTreeMap<(i64, i64, i64), usize> =
        target_exp.iter().enumerate().map(|(t, &e)| (e, t)).collect();
    let t_len = target_exp.len();
    let mut coeffs = vec![Rational::zero(); left_exp.len() * right_exp.len() * t_len];
    for (i, &(a0, a1, a2)) in left_exp.iter().enumerate() {
        for (j, &(b0, b1, b2)) in right_exp.iter().enumerate() {
            let t = index[&(a0 + b0, a1 + b1, a2 + b2)];
            coeffs[(i * right_exp.len() + j) * t_len + t] = Rational::one();
        }
    }
    MultTable::new(p2_basis(a), p2_basis(b), p2_basis(a + b), coeffs)
        .expect("coefficient block sized by construction")
}

/// The full ℙ² input for twisted queries with `L = O(d)`, `A = O(e)`:
/// all seven slots, plus the multiplication `A ⊗ L²A → L²A²` whenever the
/// degrees involved are nonnegative.
pub fn p2_surface(d: i64, e: i64) -> SurfaceData {
    let mut surface = SurfaceData::new(format!("P2(d={d},e={e})"), {
        let mut o = p2_line_bundle(0);
        o.name = "O".to_string();
        o
    })
    .expect("O(0) has h0 = 1");
    for (slot, degree) in [
        (Slot::L, d),
        (Slot::L2, 2 * d),
        (Slot::A, e),
        (Slot::LA, d + e),
        (Slot::L2A, 2 * d + e),
        (Slot::L2A2, 2 * d + 2 * e),
    ] {
        surface
            .insert_bundle(slot, p2_line_bundle(degree))
            .expect("p2 line bundle data is always well formed");
    }
    if e >= 0 && 2 * d + e >= 0 {
        surface
            .add_mult(Slot::A, Slot::L2A, Slot::L2A2, p2_mult_table(e, 2 * d + e))
            .expect("monomial bases coincide by construction");
    }
    surface
}
