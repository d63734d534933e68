//! Cross-validation of every closed formula against an independent route.
//!
//! Each check pits two computations of the same quantity against each
//! other: symmetric-power dimensions against literal monomial enumeration,
//! the conjectural square against the proved small cases, the twisted
//! sections against their trivial-twist reduction, the explicit kernel
//! against the Euler characteristic of its long exact sequence. A check
//! never panics on bad data; it reports a failed [`CheckOutcome`] instead.
//!
//! [`default_suite`] bundles the checks at the standard bounds,
//! [`full_suite`] at larger ones. Randomized checks draw from a ChaCha8
//! stream seeded explicitly ([`DEFAULT_SEED`] unless overridden), so every
//! run of a suite sees the same inputs.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::formulas::{
    sym2_cohomology_conjectural, sym2_cohomology_n2, sym2_cohomology_n3, twisted_residual_euler,
    twisted_sections, Decomposition,
};
use crate::graded::{enumerate_sym_basis, BasisSpace, GradedDim};
use crate::surface::{p2_cohomology, p2_surface, preset_surface, Preset, Slot, SurfaceData};

/// Seed used by the bundled suites.
pub const DEFAULT_SEED: u64 = 42;

/// Result of one named check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub details: String,
}

impl CheckOutcome {
    fn pass(name: String, details: String) -> Self {
        CheckOutcome { name, passed: true, details }
    }

    fn fail(name: String, details: String) -> Self {
        CheckOutcome { name, passed: false, details }
    }

    /// Pass iff the two graded dimensions agree; details name the first
    /// disagreeing degree otherwise.
    fn dims_agree(name: String, expected: &GradedDim, actual: &GradedDim) -> Self {
        if expected == actual {
            return CheckOutcome::pass(name, format!("both routes give {expected}"));
        }
        let top = expected
            .max_degree()
            .unwrap_or(0)
            .max(actual.max_degree().unwrap_or(0));
        let degree = (0..=top)
            .find(|&i| expected.dim(i) != actual.dim(i))
            .expect("unequal dims disagree somewhere");
        CheckOutcome::fail(
            name,
            format!(
                "expected {expected}, got {actual}; first disagreement in degree {degree}"
            ),
        )
    }
}

pub fn all_passed(outcomes: &[CheckOutcome]) -> bool {
    outcomes.iter().all(|o| o.passed)
}

pub fn failures(outcomes: &[CheckOutcome]) -> impl Iterator<Item = &CheckOutcome> {
    outcomes.iter().filter(|o| !o.passed)
}

/// All dimension vectors of the given length with entry sum at most
/// `max_total`, in lexicographic order.
fn dim_vectors(len: usize, max_total: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = vec![0usize; len];
    fn rec(
        pos: usize,
        budget: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if pos == current.len() {
            out.push(current.clone());
            return;
        }
        for v in 0..=budget {
            current[pos] = v;
            rec(pos + 1, budget - v, current, out);
        }
        current[pos] = 0;
    }
    rec(0, max_total, &mut current, &mut out);
    out
}

fn basis_with_dims(dims: &[usize]) -> BasisSpace {
    let mut elements = Vec::new();
    for (degree, &count) in dims.iter().enumerate() {
        for i in 0..count {
            elements.push((format!("e{degree}_{i}"), degree));
        }
    }
    BasisSpace::new(elements).expect("generated labels are distinct")
}

fn count_monomials_by_degree(basis: &BasisSpace, k: usize) -> GradedDim {
    let mut counted = Vec::new();
    for mono in enumerate_sym_basis(basis, k) {
        if counted.len() <= mono.degree() {
            counted.resize(mono.degree() + 1, 0);
        }
        counted[mono.degree()] += 1;
    }
    GradedDim::new(counted)
}

/// Super-symmetric power dimensions against explicit monomial enumeration,
/// over every dimension vector supported in degrees 0..=4 with total at
/// most `max_total`, for `k = 0..=max_k`.
pub fn check_sym_enumeration(max_total: usize, max_k: usize) -> Vec<CheckOutcome> {
    let mut out = Vec::new();
    for dims in dim_vectors(5, max_total) {
        let basis = basis_with_dims(&dims);
        let space = GradedDim::new(dims.clone());
        for k in 0..=max_k {
            out.push(CheckOutcome::dims_agree(
                format!("sym_enumeration[dims={dims:?},k={k}]"),
                &count_monomials_by_degree(&basis, k),
                &space.sym_power(k),
            ));
        }
    }
    out
}

fn random_surface_dims(rng: &mut ChaCha8Rng) -> Vec<usize> {
    vec![rng.gen_range(0..=4), rng.gen_range(0..=4), rng.gen_range(0..=4)]
}

fn compare_decompositions(
    name: String,
    reference: Result<Decomposition, crate::error::Error>,
    candidate: Result<Decomposition, crate::error::Error>,
) -> Vec<CheckOutcome> {
    match (reference, candidate) {
        (Ok(reference), Ok(candidate)) => {
            let mut out = vec![CheckOutcome::dims_agree(
                format!("{name}.total"),
                reference.total(),
                candidate.total(),
            )];
            for (i, (r, c)) in
                reference.summands().iter().zip(candidate.summands()).enumerate()
            {
                out.push(CheckOutcome::dims_agree(
                    format!("{name}.summand{i}"),
                    &r.dims,
                    &c.dims,
                ));
            }
            out
        }
        (r, c) => vec![CheckOutcome::fail(
            name,
            format!("evaluation failed: reference {r:?}, candidate {c:?}"),
        )],
    }
}

/// The conjectural square at `n = 2, 3` against the proved decompositions,
/// on `samples` random dimension vectors from a seeded stream. `H*(O)`
/// always has `h⁰ = 1`; all other entries range over 0..=4.
pub fn check_conjecture_specialization(samples: usize, seed: u64) -> Vec<CheckOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for sample in 0..samples {
        let mut h_o_dims = random_surface_dims(&mut rng);
        h_o_dims[0] = 1;
        let h_o = GradedDim::new(h_o_dims);
        let h_l = GradedDim::new(random_surface_dims(&mut rng));
        let h_l2 = GradedDim::new(random_surface_dims(&mut rng));
        out.extend(compare_decompositions(
            format!("conjecture_specialization[sample={sample},n=2]"),
            sym2_cohomology_n2(&h_o, &h_l, &h_l2),
            sym2_cohomology_conjectural(2, &h_o, &h_l, &h_l2),
        ));
        out.extend(compare_decompositions(
            format!("conjecture_specialization[sample={sample},n=3]"),
            sym2_cohomology_n3(&h_o, &h_l, &h_l2),
            sym2_cohomology_conjectural(3, &h_o, &h_l, &h_l2),
        ));
    }
    out
}

/// Twisted sections with the trivial twist `A = O` on ℙ², `L = O(d)`:
/// the kernel must vanish and the total must be the independently computed
/// `C(h⁰(O(d)) + 1, 2)`, for `n = 2..=max_n`, `d = 0..=max_d`.
pub fn check_twisted_reduces_trivial(max_n: usize, max_d: i64) -> Vec<CheckOutcome> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        for d in 0..=max_d {
            let name = format!("twisted_trivial[n={n},d={d}]");
            match twisted_sections(n, &p2_surface(d, 0)) {
                Ok(s) => {
                    // h0(O(d)) and the symmetric square, straight arithmetic.
                    let h0 = ((d + 1) * (d + 2) / 2) as usize;
                    let expected = GradedDim::new(vec![h0 * (h0 + 1) / 2]);
                    if s.kernel.kernel_dim != 0 {
                        out.push(CheckOutcome::fail(
                            name,
                            format!(
                                "trivial twist must have no kernel, got {}",
                                s.kernel.kernel_dim
                            ),
                        ));
                    } else {
                        out.push(CheckOutcome::dims_agree(
                            name,
                            &expected,
                            s.decomposition.total(),
                        ));
                    }
                }
                Err(e) => out.push(CheckOutcome::fail(name, format!("evaluation failed: {e}"))),
            }
        }
    }
    out
}

/// The explicit kernel of the twisted-sections map on ℙ² against the Euler
/// characteristic of its long exact sequence, `n = 2`, `L = O(d)`,
/// `A = O(e)` over `d = 0..=max_d`, `e = 0..=max_e`. In this ample range
/// multiplication is surjective, so the two must agree exactly.
pub fn check_two_routes_n2(max_d: i64, max_e: i64) -> Vec<CheckOutcome> {
    let mut out = Vec::new();
    for d in 0..=max_d {
        for e in 0..=max_e {
            let name = format!("two_routes[n=2,d={d},e={e}]");
            let chi = twisted_residual_euler(
                2,
                &p2_cohomology(e),
                &p2_cohomology(2 * d + e),
                &p2_cohomology(2 * d + 2 * e),
            );
            match twisted_sections(2, &p2_surface(d, e)) {
                Ok(s) => {
                    let kernel = s.kernel.kernel_dim as i64;
                    if kernel == chi {
                        out.push(CheckOutcome::pass(
                            name,
                            format!("kernel route and Euler route both give {chi}"),
                        ));
                    } else {
                        out.push(CheckOutcome::fail(
                            name,
                            format!("kernel route gives {kernel}, Euler route gives {chi}"),
                        ));
                    }
                }
                Err(e) => out.push(CheckOutcome::fail(name, format!("evaluation failed: {e}"))),
            }
        }
    }
    out
}

/// For each surface: the residual summand of the proved square (`n = 2, 3`)
/// against the Euler characteristic forced by the long exact sequence with
/// `A = O`. Surfaces must carry slots `O`, `L`, `L2`.
pub fn check_les_euler(surfaces: &[SurfaceData]) -> Vec<CheckOutcome> {
    let mut out = Vec::new();
    for surface in surfaces {
        for n in [2usize, 3] {
            let name = format!("les_euler[{},n={n}]", surface.name());
            let data = (|| -> Result<(i64, i64), crate::error::Error> {
                let h_o = surface.dims(Slot::O)?;
                let h_l = surface.dims(Slot::L)?;
                let h_l2 = surface.dims(Slot::L2)?;
                let decomposition = match n {
                    2 => sym2_cohomology_n2(h_o, h_l, h_l2)?,
                    _ => sym2_cohomology_n3(h_o, h_l, h_l2)?,
                };
                let residual = decomposition.total().euler_char()
                    - decomposition.summands()[0].dims.euler_char();
                // A = O specializes the twisted sequence: L²A = L²A² = L².
                let chi = twisted_residual_euler(n, h_o, h_l2, h_l2);
                Ok((residual, chi))
            })();
            match data {
                Ok((residual, chi)) if residual == chi => out.push(CheckOutcome::pass(
                    name,
                    format!("decomposition and exact sequence both give chi(K) = {chi}"),
                )),
                Ok((residual, chi)) => out.push(CheckOutcome::fail(
                    name,
                    format!("decomposition gives {residual}, exact sequence gives {chi}"),
                )),
                Err(e) => out.push(CheckOutcome::fail(name, format!("evaluation failed: {e}"))),
            }
        }
    }
    out
}

/// The three named presets with consistent sample polarizations:
/// a rational surface with `L = O(1)`-like data, a K3 with a genus-7
/// polarization, an abelian surface with a principal polarization squared.
pub fn preset_check_surfaces() -> Vec<SurfaceData> {
    fn sample(preset: Preset, l: &[usize], l2: &[usize]) -> SurfaceData {
        let mut dims = BTreeMap::new();
        dims.insert(Slot::L, GradedDim::from(l));
        dims.insert(Slot::L2, GradedDim::from(l2));
        preset_surface(preset, &dims).expect("preset sample data is well formed")
    }
    vec![
        sample(Preset::RationalQpg0, &[3], &[6]),
        sample(Preset::K3, &[8], &[26]),
        sample(Preset::Abelian, &[2], &[8]),
    ]
}

/// Every check at the standard bounds. Runs in seconds.
pub fn default_suite() -> Vec<CheckOutcome> {
    let mut out = Vec::new();
    out.extend(check_sym_enumeration(6, 4));
    out.extend(check_conjecture_specialization(100, DEFAULT_SEED));
    out.extend(check_twisted_reduces_trivial(6, 3));
    out.extend(check_two_routes_n2(3, 3));
    out.extend(check_les_euler(&preset_check_surfaces()));
    out
}

/// Every check at enlarged bounds; minutes-scale budget.
pub fn full_suite() -> Vec<CheckOutcome> {
    let mut out = Vec::new();
    out.extend(check_sym_enumeration(8, 5));
    out.extend(check_conjecture_specialization(500, DEFAULT_SEED));
    out.extend(check_twisted_reduces_trivial(8, 4));
    out.extend(check_two_routes_n2(4, 4));
    out.extend(check_les_euler(&preset_check_surfaces()));
    out
}
