//! Named verification suites that sweep the whole construction at configured
//! bounds and report every check as a machine-readable record.
//!
//! A suite walks a family of instances (block structures, diagrams, index
//! tableaux, operators), runs the exact checks the library exposes, and
//! converts each outcome into a [`CheckReport`]. Falsifications surface as
//! `Fail` records naming the instance precisely; structural errors of use
//! (unknown suite names, bounds exceeded) propagate as real errors instead.

use std::fmt;

use itertools::Itertools;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::combinatorics::{
    compositions, count_standard, enumerate_nst, enumerate_r_diagrams, enumerate_st,
    index_tableau, word, BlockStructure, MultiTableau, Tableau,
};
use crate::decomp::{
    factorial_q_series, generator_keys, graded_rank_series, isotypic_projector,
    multiplicity_table, one_dimensionality_check, top_generator_degree, FreeModuleSolver,
};
use crate::error::{Error, Result};
use crate::groupalg::{apply_element, idempotent_report, GroupAlgebraElement};
use crate::linalg::polynomial_rank;
use crate::polyalg::{monomials_of_degree, Polynomial};
use crate::specht::{
    character_norm, classical_specht, higher_specht, higher_specht_any_entries, module_basis,
};
use crate::weyl::{
    block_laplacian, divisibility_witness, image_module_check, invariant_derivation,
    DifferentialOperator, DivisibilityWitness, ImageModuleOutcome,
};
use crate::{q, QOperator, QPolynomial};

/// Outcome of a single check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skip,
    Info,
}

impl Status {
    /// Lowercase form used in serialized reports.
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skip => "skip",
            Status::Info => "info",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
            Status::Info => "INFO",
        };
        write!(f, "{s}")
    }
}

/// One verified (or falsified, or merely recorded) statement about one
/// concrete instance.
#[derive(Clone, Debug)]
pub struct CheckReport {
    /// Which family of checks this record belongs to.
    pub check: String,
    /// The concrete instance the check ran on.
    pub instance: String,
    pub status: Status,
    /// What was established, or the exact discrepancy on failure.
    pub witness: String,
}

impl CheckReport {
    fn new(
        check: impl Into<String>,
        instance: impl Into<String>,
        status: Status,
        witness: impl Into<String>,
    ) -> Self {
        CheckReport {
            check: check.into(),
            instance: instance.into(),
            status,
            witness: witness.into(),
        }
    }

    fn pass(check: impl Into<String>, instance: impl Into<String>, w: impl Into<String>) -> Self {
        Self::new(check, instance, Status::Pass, w)
    }

    fn fail(check: impl Into<String>, instance: impl Into<String>, w: impl Into<String>) -> Self {
        Self::new(check, instance, Status::Fail, w)
    }

    fn info(check: impl Into<String>, instance: impl Into<String>, w: impl Into<String>) -> Self {
        Self::new(check, instance, Status::Info, w)
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} [{}] {}",
            self.status, self.check, self.instance, self.witness
        )
    }
}

/// True when at least one record is a falsification.
pub fn has_failure(reports: &[CheckReport]) -> bool {
    reports.iter().any(|r| r.status == Status::Fail)
}

/// Bounds and sampling parameters for the suites.
#[derive(Clone, Debug)]
pub struct VerifyConfig {
    /// Sweep every block structure of total size up to this.
    pub max_n: usize,
    /// Degree cap for random polynomials fed to the decomposition.
    pub max_degree: u32,
    /// Hard ceiling on |S_{n_1} × ⋯ × S_{n_r}| for whole-group computations.
    pub max_group_order: u128,
    /// Restrict every sweep to one block structure instead.
    pub blocks: Option<BlockStructure>,
    /// Seed for the deterministic sample streams.
    pub seed: u64,
    /// Random polynomials per structure in the freeness suite.
    pub random_polys: usize,
    /// Random operator-family combinations per structure.
    pub random_operators: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_n: 5,
            max_degree: 4,
            max_group_order: 720,
            blocks: None,
            seed: 0,
            random_polys: 100,
            random_operators: 20,
        }
    }
}

/// The named suites, in the order `all` runs them.
pub const SUITES: &[&str] = &[
    "golden-index",
    "idempotency",
    "module-basis",
    "operator-divisibility",
    "operator-image",
    "freeness",
    "multiplicity",
    "projection-rank",
    "idempotent-resolution",
];

/// Runs one suite by name; `all` runs every suite in declaration order.
pub fn run_suite(name: &str, config: &VerifyConfig) -> Result<Vec<CheckReport>> {
    match name {
        "golden-index" => golden_index(config),
        "idempotency" => idempotency(config),
        "module-basis" => module_basis_suite(config),
        "operator-divisibility" => operator_divisibility(config),
        "operator-image" => operator_image(config),
        "freeness" => freeness(config),
        "multiplicity" => multiplicity(config),
        "projection-rank" => projection_rank(config),
        "idempotent-resolution" => idempotent_resolution(config),
        "all" => run_all(config),
        other => Err(Error::Invalid(format!(
            "unknown suite `{other}`; expected one of {} or `all`",
            SUITES.join(", ")
        ))),
    }
}

/// Every suite, concatenated.
pub fn run_all(config: &VerifyConfig) -> Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    for name in SUITES {
        out.extend(run_suite(name, config)?);
    }
    Ok(out)
}

/// The block structures a sweeping suite visits.
fn sweep_structures(config: &VerifyConfig) -> Vec<BlockStructure> {
    match &config.blocks {
        Some(b) => vec![b.clone()],
        None => (1..=config.max_n).flat_map(compositions).collect(),
    }
}

/// Converts a falsification into a `Fail` record and keeps going; any other
/// error propagates. Returns the value when the inner check succeeded.
fn capture<T>(
    reports: &mut Vec<CheckReport>,
    outcome: Result<T>,
    check: &str,
    instance: &str,
) -> Result<Option<T>> {
    match outcome {
        Ok(v) => Ok(Some(v)),
        Err(Error::Falsified {
            check: c,
            instance: i,
            detail,
        }) => {
            let check = if c.is_empty() { check.to_string() } else { c };
            let instance = if i.is_empty() { instance.to_string() } else { i };
            reports.push(CheckReport::fail(check, instance, detail));
            Ok(None)
        }
        Err(e) => Err(e),
    }
}

/// A fixed tableau whose word and index tableau are known in closed form:
/// T = [[1,4,6],[2,7]]|[[3,8],[5]] over blocks 5,3 has column word
/// (2,1,7,4,6,5,3,8) and full-word index tableau [[0,2,3],[1,4]]|[[1,4],[2]].
fn golden_index(_config: &VerifyConfig) -> Result<Vec<CheckReport>> {
    let block = BlockStructure::new(vec![5, 3])?;
    let t = MultiTableau::new(
        vec![
            Tableau::new(vec![vec![1, 4, 6], vec![2, 7]])?,
            Tableau::new(vec![vec![3, 8], vec![5]])?,
        ],
        block,
    )?;
    let got_word = format!("({})", word(&t).letters().iter().join(","));
    let got_index = index_tableau(&t)?.to_string();
    let want_word = "(2,1,7,4,6,5,3,8)";
    let want_index = "[[0,2,3],[1,4]]|[[1,4],[2]]";
    let instance = format!("blocks 5,3, T={t}");
    let report = if got_word == want_word && got_index == want_index {
        CheckReport::pass(
            "golden-index",
            instance,
            format!("w(T) = {got_word}, i(T) = {got_index}"),
        )
    } else {
        CheckReport::fail(
            "golden-index",
            instance,
            format!(
                "expected w(T) = {want_word} and i(T) = {want_index}, \
                 computed w(T) = {got_word} and i(T) = {got_index}"
            ),
        )
    };
    Ok(vec![report])
}

/// Idempotency and orthogonality of the full symmetrizer family, swept over
/// every block structure with parts at most 4 (total size at most 6).
fn idempotency(config: &VerifyConfig) -> Result<Vec<CheckReport>> {
    let structures = match &config.blocks {
        Some(b) => vec![b.clone()],
        None => (1..=6)
            .flat_map(compositions)
            .filter(|b| b.sizes().iter().all(|&s| s <= 4))
            .collect(),
    };
    let mut reports = Vec::new();
    for b in structures {
        let rep = idempotent_report(&b, config.max_group_order)?;
        let m = rep.tableaux.len();
        let mut problems = Vec::new();
        for (i, ok) in rep.idempotent.iter().enumerate() {
            if !ok {
                problems.push(format!("e_T·e_T ≠ e_T for T={}", rep.tableaux[i]));
            }
        }
        if !rep.sum_is_identity {
            problems.push("Σ_T e_T ≠ 1".to_string());
        }
        let mut same_shape_pairs = 0usize;
        let mut same_shape_nonzero = 0usize;
        for i in 0..m {
            for j in 0..m {
                if i == j {
                    continue;
                }
                if rep.tableaux[i].diagram() == rep.tableaux[j].diagram() {
                    same_shape_pairs += 1;
                    if !rep.product_zero[i][j] {
                        same_shape_nonzero += 1;
                    }
                } else if !rep.product_zero[i][j] {
                    problems.push(format!(
                        "cross-shape product e_{{{}}}·e_{{{}}} ≠ 0",
                        rep.tableaux[i], rep.tableaux[j]
                    ));
                }
            }
        }
        let instance = format!("blocks {b}");
        if problems.is_empty() {
            let same_shape = if same_shape_pairs == 0 {
                "no same-shape pairs".to_string()
            } else {
                format!(
                    "{same_shape_nonzero} of {same_shape_pairs} ordered same-shape \
                     products nonzero (recorded, not asserted)"
                )
            };
            reports.push(CheckReport::pass(
                "idempotency",
                instance,
                format!(
                    "{m} symmetrizers: all idempotent, Σ e_T = 1, \
                     cross-shape products vanish; {same_shape}"
                ),
            ));
        } else {
            reports.push(CheckReport::fail("idempotency", instance, problems.join("; ")));
        }
    }
    Ok(reports)
}

/// For every diagram and every block-respecting index tableau S: the family
/// {F_T^S}_T is independent, spans a group-stable module of the hook-formula
/// dimension, and its character has norm one.
fn module_basis_suite(config: &VerifyConfig) -> Result<Vec<CheckReport>> {
    let mut reports = Vec::new();
    for b in sweep_structures(config) {
        for lambda in enumerate_r_diagrams(&b) {
            let instance = format!("blocks {b}, λ={lambda}");
            let expected_dim: u128 = lambda.components().iter().map(count_standard).product();
            let choices = enumerate_nst(&lambda);
            let mut all_ok = true;
            for s in &choices {
                let s_instance = format!("{instance}, S={s}");
                let basis =
                    match capture(&mut reports, module_basis(&lambda, s), "module-basis", &s_instance)? {
                        Some(basis) => basis,
                        None => {
                            all_ok = false;
                            continue;
                        }
                    };
                if basis.dimension() as u128 != expected_dim {
                    reports.push(CheckReport::fail(
                        "module-basis",
                        s_instance,
                        format!(
                            "dimension {} differs from hook-formula value {expected_dim}",
                            basis.dimension()
                        ),
                    ));
                    all_ok = false;
                    continue;
                }
                let norm = character_norm(&basis, config.max_group_order)?;
                if !norm.is_one() {
                    reports.push(CheckReport::fail(
                        "module-basis",
                        s_instance,
                        format!("character norm ⟨χ,χ⟩ = {norm}, expected 1"),
                    ));
                    all_ok = false;
                }
            }
            if all_ok {
                reports.push(CheckReport::pass(
                    "module-basis",
                    instance,
                    format!(
                        "{} index tableaux S: dimension {expected_dim}, independent, \
                         group-stable, ⟨χ,χ⟩ = 1",
                        choices.len()
                    ),
                ));
            }
        }
    }
    Ok(reports)
}

/// The invariant-operator family exercised by the operator suites: the
/// identity, the basic derivations D_{i,k} = Σ_j x_j^k ∂_j for k ≤ 3, and
/// deterministic random rational combinations of the derivations. Per-block
/// Laplacians Σ_j ∂_j² join only where second-order behavior is studied.
struct LabeledOperator {
    label: String,
    op: QOperator,
}

fn operator_family(
    block: &BlockStructure,
    config: &VerifyConfig,
    rng: &mut ChaCha8Rng,
    second_order: bool,
) -> Vec<LabeledOperator> {
    let n = block.n();
    let mut family = vec![LabeledOperator {
        label: "1".to_string(),
        op: DifferentialOperator::identity(n),
    }];
    let mut basic: Vec<QOperator> = Vec::new();
    for i in 0..block.r() {
        for k in 0..=3u32 {
            let d: QOperator = invariant_derivation(block, i, k);
            basic.push(d.clone());
            family.push(LabeledOperator {
                label: format!("D[{},{k}]", i + 1),
                op: d,
            });
        }
    }
    for idx in 0..config.random_operators {
        let mut op = DifferentialOperator::zero(n);
        for d in &basic {
            let num: i64 = rng.random_range(-3..=3);
            if num == 0 {
                continue;
            }
            let den: i64 = rng.random_range(1..=3);
            op = &op + &d.scale(&q(num, den));
        }
        if op.is_zero() {
            op = basic[0].clone();
        }
        family.push(LabeledOperator {
            label: format!("R{}", idx + 1),
            op,
        });
    }
    if second_order {
        for i in 0..block.r() {
            family.push(LabeledOperator {
                label: format!("L[{}]", i + 1),
                op: block_laplacian(block, i),
            });
        }
    }
    family
}

/// Applying any invariant derivation (or the identity) to F_T^S yields a
/// multiple of the classical Specht polynomial F_T by a column-stabilizer
/// invariant; second-order Laplacian images are recorded without any claim.
fn operator_divisibility(config: &VerifyConfig) -> Result<Vec<CheckReport>> {
    let mut reports = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    for b in sweep_structures(config) {
        let instance = format!("blocks {b}");
        let family = operator_family(&b, config, &mut rng, false);
        let keys = generator_keys(&b)?;
        let mut zero = 0usize;
        let mut quotients = 0usize;
        let mut ok = true;
        'family: for lab in &family {
            for key in &keys {
                match capture(
                    &mut reports,
                    divisibility_witness(&lab.op, key),
                    "operator-divisibility",
                    &instance,
                )? {
                    Some(DivisibilityWitness::ZeroImage) => zero += 1,
                    Some(DivisibilityWitness::Quotient(_)) => quotients += 1,
                    None => {
                        ok = false;
                        break 'family;
                    }
                }
            }
        }
        if ok {
            reports.push(CheckReport::pass(
                "operator-divisibility",
                instance.clone(),
                format!(
                    "{} keys × {} operators: {zero} zero images, \
                     {quotients} column-invariant quotients of F_T",
                    keys.len(),
                    family.len()
                ),
            ));
        }
        for i in 0..b.r() {
            let lap: QOperator = block_laplacian(&b, i);
            let mut z = 0usize;
            let mut divisible = 0usize;
            let mut indivisible = 0usize;
            for key in &keys {
                let f: QPolynomial = higher_specht(key.t(), key.s())?;
                let image = lap.apply(&f);
                if image.is_zero() {
                    z += 1;
                } else {
                    let classical: QPolynomial = classical_specht(key.t());
                    match crate::polyalg::exact_divide(&image, &classical)? {
                        Some(_) => divisible += 1,
                        None => indivisible += 1,
                    }
                }
            }
            reports.push(CheckReport::info(
                "operator-divisibility",
                format!("{instance}, D=L[{}]", i + 1),
                format!(
                    "second-order images over {} keys: {z} zero, {divisible} divisible \
                     by F_T, {indivisible} not divisible (recorded, no claim)",
                    keys.len()
                ),
            ));
        }
    }
    Ok(reports)
}

/// Whenever an invariant operator keeps every basis polynomial of a module
/// nonzero, the images span an isomorphic copy: independent and intertwining
/// the group action. Second-order Laplacians are exercised here as well.
fn operator_image(config: &VerifyConfig) -> Result<Vec<CheckReport>> {
    let mut reports = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    for b in sweep_structures(config) {
        let instance = format!("blocks {b}");
        let family = operator_family(&b, config, &mut rng, true);
        let mut verified = 0usize;
        let mut skipped = 0usize;
        let mut pairs = 0usize;
        let mut ok = true;
        for lambda in enumerate_r_diagrams(&b) {
            for s in enumerate_nst(&lambda) {
                pairs += 1;
                for lab in &family {
                    match capture(
                        &mut reports,
                        image_module_check(&lab.op, &lambda, &s),
                        "operator-image",
                        &format!("{instance}, λ={lambda}, S={s}, D={}", lab.label),
                    )? {
                        Some(ImageModuleOutcome::Verified) => verified += 1,
                        Some(ImageModuleOutcome::Skipped { .. }) => skipped += 1,
                        None => ok = false,
                    }
                }
            }
        }
        if ok {
            reports.push(CheckReport::pass(
                "operator-image",
                instance,
                format!(
                    "{pairs} modules × {} operators: {verified} isomorphic images \
                     verified, {skipped} skipped on a vanishing image",
                    family.len()
                ),
            ));
        }
    }
    Ok(reports)
}

/// A deterministic random polynomial: a handful of monomials of degree at
/// most `max_degree` with small rational coefficients, never zero.
fn random_polynomial(rng: &mut ChaCha8Rng, n: usize, max_degree: u32) -> QPolynomial {
    let mut f = QPolynomial::zero(n);
    for _ in 0..6 {
        let d = rng.random_range(0..=max_degree);
        let monomials = monomials_of_degree(n, d);
        let exps = monomials[rng.random_range(0..monomials.len())].clone();
        let num: i64 = rng.random_range(1..=9);
        let den: i64 = rng.random_range(1..=9);
        let sign = if rng.random_bool(0.5) { 1 } else { -1 };
        f = &f + &Polynomial::monomial(n, exps, q(sign * num, den));
    }
    if f.is_zero() {
        f = Polynomial::one(n);
    }
    f
}

/// The ring is a free module over its invariants on the higher Specht
/// generators: graded ranks match Π [n_i]_q!, and random polynomials
/// decompose uniquely and reconstruct exactly.
fn freeness(config: &VerifyConfig) -> Result<Vec<CheckReport>> {
    let mut reports = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    for b in sweep_structures(config) {
        let instance = format!("blocks {b}");
        let top = top_generator_degree(&b);
        let got = match capture(
            &mut reports,
            graded_rank_series(&b, top),
            "freeness-series",
            &instance,
        )? {
            Some(series) => series,
            None => continue,
        };
        let want = factorial_q_series(&b, top);
        if got == want {
            reports.push(CheckReport::pass(
                "freeness-series",
                instance.clone(),
                format!("generator degrees give {got}, matching Π [n_i]_q!"),
            ));
        } else {
            reports.push(CheckReport::fail(
                "freeness-series",
                instance.clone(),
                format!("generator degrees give {got}, but Π [n_i]_q! = {want}"),
            ));
            continue;
        }
        let solver = match capture(
            &mut reports,
            FreeModuleSolver::new(&b),
            "freeness-roundtrip",
            &instance,
        )? {
            Some(solver) => solver,
            None => continue,
        };
        let generator_polys: Vec<QPolynomial> =
            solver.generators().map(|(_, f)| f.clone()).collect();
        let mut ok = true;
        for _ in 0..config.random_polys {
            let f = random_polynomial(&mut rng, b.n(), config.max_degree);
            let result = match capture(
                &mut reports,
                solver.decompose(&f),
                "freeness-roundtrip",
                &instance,
            )? {
                Some(result) => result,
                None => {
                    ok = false;
                    break;
                }
            };
            let mut back = QPolynomial::zero(b.n());
            for ((_, coeff), gen) in result.coefficients().iter().zip(&generator_polys) {
                if !coeff.is_zero() {
                    back = &back + &(coeff * gen);
                }
            }
            if back != f {
                reports.push(CheckReport::fail(
                    "freeness-roundtrip",
                    instance.clone(),
                    format!("reconstruction of {f} from its coefficients differs"),
                ));
                ok = false;
                break;
            }
        }
        if ok {
            reports.push(CheckReport::pass(
                "freeness-roundtrip",
                instance.clone(),
                format!(
                    "{} random polynomials of degree ≤ {}: unique coefficients over \
                     full-column-rank systems, exact reconstruction",
                    config.random_polys, config.max_degree
                ),
            ));
        }
        if b.sizes() == [2, 1] {
            reports.push(full_entry_set_reading(&b)?);
        }
    }
    Ok(reports)
}

/// Documents what happens when the index tableau S is allowed to range over
/// standard tableaux on the full entry set instead of block-respecting ones:
/// the family over-counts and collapses in rank.
fn full_entry_set_reading(b: &BlockStructure) -> Result<CheckReport> {
    let mut family: Vec<QPolynomial> = Vec::new();
    let mut natural = 0usize;
    for lambda in enumerate_r_diagrams(b) {
        let nst = enumerate_nst(&lambda);
        natural += nst.len() * nst.len();
        for t in &nst {
            for s in enumerate_st(&lambda) {
                family.push(higher_specht_any_entries(t, &s)?);
            }
        }
    }
    let rank = polynomial_rank(&family);
    Ok(CheckReport::info(
        "freeness-index-reading",
        format!("blocks {b}"),
        format!(
            "full-entry-set index tableaux give {} polynomials of rank {rank}; \
             the {natural} block-respecting ones form the free basis",
            family.len()
        ),
    ))
}

/// Hook-formula dimensions agree with tableau enumeration and their squares
/// sum to the group order.
fn multiplicity(config: &VerifyConfig) -> Result<Vec<CheckReport>> {
    let mut reports = Vec::new();
    for b in sweep_structures(config) {
        let instance = format!("blocks {b}");
        if let Some(table) = capture(
            &mut reports,
            multiplicity_table(&b, config.max_group_order),
            "multiplicity",
            &instance,
        )? {
            reports.push(CheckReport::pass(
                "multiplicity",
                instance,
                format!(
                    "{} diagrams: Σ (f^λ)² = {} = Π n_i!",
                    table.rows().len(),
                    table.group_order()
                ),
            ));
        }
    }
    Ok(reports)
}

/// Inside each isotypic module, the symmetrizer e_T cuts out a rank-one
/// image for every tableau T; the central projectors form an orthogonal
/// resolution of the identity and commute with invariant operators.
fn projection_rank(config: &VerifyConfig) -> Result<Vec<CheckReport>> {
    let mut reports = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    for b in sweep_structures(config) {
        let instance = format!("blocks {b}");
        let diagrams = enumerate_r_diagrams(&b);

        let mut tableaux = 0usize;
        let mut ok = true;
        for lambda in &diagrams {
            for t in enumerate_nst(lambda) {
                tableaux += 1;
                if capture(
                    &mut reports,
                    one_dimensionality_check(lambda, &t),
                    "projection-rank",
                    &format!("{instance}, λ={lambda}, T={t}"),
                )?
                .is_none()
                {
                    ok = false;
                }
            }
        }
        if ok {
            reports.push(CheckReport::pass(
                "projection-rank",
                instance.clone(),
                format!("{tableaux} tableaux: every e_T image inside its module has rank 1"),
            ));
        }

        let mut projectors = Vec::new();
        let mut algebra_ok = true;
        for lambda in &diagrams {
            match capture(
                &mut reports,
                isotypic_projector(lambda, config.max_group_order),
                "projector-algebra",
                &format!("{instance}, λ={lambda}"),
            )? {
                Some(p) => projectors.push((lambda, p)),
                None => algebra_ok = false,
            }
        }
        if algebra_ok {
            let mut problems = Vec::new();
            for (i, (lambda, p)) in projectors.iter().enumerate() {
                if !p.is_idempotent() {
                    problems.push(format!("π_{lambda} is not idempotent"));
                }
                for (mu, r) in projectors.iter().skip(i + 1).map(|(m, r)| (m, r)) {
                    if !(p * r).is_zero() || !(r * p).is_zero() {
                        problems.push(format!("π_{lambda}·π_{mu} ≠ 0"));
                    }
                }
            }
            let total = projectors
                .iter()
                .fold(GroupAlgebraElement::zero(b.clone()), |acc, (_, p)| &acc + p);
            if total != GroupAlgebraElement::identity(b.clone()) {
                problems.push("Σ_λ π_λ ≠ 1".to_string());
            }
            if problems.is_empty() {
                reports.push(CheckReport::pass(
                    "projector-algebra",
                    instance.clone(),
                    format!(
                        "{} central projectors: idempotent, pairwise orthogonal, Σ π_λ = 1",
                        projectors.len()
                    ),
                ));
            } else {
                reports.push(CheckReport::fail(
                    "projector-algebra",
                    instance.clone(),
                    problems.join("; "),
                ));
            }

            let derivation: QOperator = invariant_derivation(&b, 0, 2);
            let laplacian: QOperator = block_laplacian(&b, 0);
            let mut commute_ok = true;
            for (lambda, p) in &projectors {
                let f = random_polynomial(&mut rng, b.n(), config.max_degree);
                for (label, op) in [("D[1,2]", &derivation), ("L[1]", &laplacian)] {
                    if apply_element(p, &op.apply(&f)) != op.apply(&apply_element(p, &f)) {
                        reports.push(CheckReport::fail(
                            "projector-derivation",
                            format!("{instance}, λ={lambda}, D={label}"),
                            format!("π_λ(D·f) ≠ D(π_λ·f) for f = {f}"),
                        ));
                        commute_ok = false;
                    }
                }
            }
            if commute_ok {
                reports.push(CheckReport::pass(
                    "projector-derivation",
                    instance.clone(),
                    format!(
                        "π_λ(D·f) = D(π_λ·f) for {} diagrams × 2 invariant operators \
                         on random samples",
                        projectors.len()
                    ),
                ));
            }
        }
    }
    Ok(reports)
}

/// The natural symmetrizers resolve the identity: Σ_T e_T = 1, with the
/// same-shape pairwise products documented rather than asserted.
fn idempotent_resolution(config: &VerifyConfig) -> Result<Vec<CheckReport>> {
    let structures = match &config.blocks {
        Some(b) => vec![b.clone()],
        None => vec![vec![2], vec![3], vec![2, 1], vec![2, 2]]
            .into_iter()
            .map(BlockStructure::new)
            .collect::<Result<Vec<_>>>()?,
    };
    let mut reports = Vec::new();
    for b in structures {
        let instance = format!("blocks {b}");
        let rep = idempotent_report(&b, config.max_group_order)?;
        let m = rep.tableaux.len();
        if rep.sum_is_identity {
            reports.push(CheckReport::pass(
                "idempotent-resolution",
                instance.clone(),
                format!("Σ over {m} natural symmetrizers of e_T = 1"),
            ));
        } else {
            reports.push(CheckReport::fail(
                "idempotent-resolution",
                instance.clone(),
                format!("Σ over {m} natural symmetrizers of e_T ≠ 1"),
            ));
        }
        let mut same_shape = Vec::new();
        for i in 0..m {
            for j in 0..m {
                if i != j && rep.tableaux[i].diagram() == rep.tableaux[j].diagram() {
                    same_shape.push(format!(
                        "e_{{{}}}·e_{{{}}} {} 0",
                        rep.tableaux[i],
                        rep.tableaux[j],
                        if rep.product_zero[i][j] { "=" } else { "≠" }
                    ));
                }
            }
        }
        let witness = if same_shape.is_empty() {
            "no same-shape pairs of tableaux".to_string()
        } else {
            same_shape.join("; ")
        };
        reports.push(CheckReport::info(
            "idempotent-products",
            instance,
            witness,
        ));
    }
    Ok(reports)
}
