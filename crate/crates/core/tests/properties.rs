//! Randomized exact identities: ring and action laws, division round-trips,
//! the index-word successor rule, Weyl-algebra functional laws, isotypic
//! projector algebra, and the decomposition round-trip. Everything is checked
//! with exact rational arithmetic — equality means equality.

use std::sync::OnceLock;

use proptest::prelude::*;

use hspecht::combinatorics::{index_word_relative, BlockStructure, MultiDiagram, Partition};
use hspecht::decomp::{isotypic_projection, reconstruct, FreeModuleSolver};
use hspecht::groupalg::{all_permutations, apply_element, GroupAlgebraElement, Permutation};
use hspecht::polyalg::{exact_divide, permute, ExponentVector, Polynomial};
use hspecht::weyl::{invariant_derivation, DifferentialOperator};
use hspecht::{q, QOperator, QPolynomial};

fn arb_poly(n: usize, max_exp: u32, max_terms: usize) -> impl Strategy<Value = QPolynomial> {
    proptest::collection::vec(
        (
            proptest::collection::vec(0..=max_exp, n),
            -9i64..=9,
            1i64..=5,
        ),
        0..=max_terms,
    )
    .prop_map(move |terms| {
        Polynomial::from_terms(
            n,
            terms
                .into_iter()
                .map(|(exps, num, den)| (ExponentVector::new(exps), q(num, den))),
        )
    })
}

fn arb_perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|images| Permutation::from_images(images).expect("shuffled images are valid"))
}

/// A random element of the group algebra of S_n (single block).
fn arb_element(n: usize) -> impl Strategy<Value = GroupAlgebraElement<hspecht::Q>> {
    let perms = all_permutations(n);
    let len = perms.len();
    proptest::collection::vec((-4i64..=4, 1i64..=3), len).prop_map(move |coeffs| {
        GroupAlgebraElement::from_terms(
            BlockStructure::new(vec![n]).expect("positive block size"),
            perms
                .iter()
                .cloned()
                .zip(coeffs.into_iter().map(|(num, den)| q(num, den))),
        )
        .expect("single-block permutations preserve blocks")
    })
}

proptest! {
    #[test]
    fn polynomial_ring_laws(
        f in arb_poly(3, 3, 5),
        g in arb_poly(3, 3, 5),
        h in arb_poly(3, 3, 5),
    ) {
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert_eq!(&f - &f, Polynomial::zero(3));
    }

    #[test]
    fn permutations_act_on_polynomials(
        sigma in arb_perm(4),
        tau in arb_perm(4),
        f in arb_poly(4, 3, 4),
        g in arb_poly(4, 3, 4),
    ) {
        // (σ∘τ)·f = σ·(τ·f), and the action is a ring map
        prop_assert_eq!(
            permute(&sigma.compose(&tau), &f),
            permute(&sigma, &permute(&tau, &f))
        );
        prop_assert_eq!(
            permute(&sigma, &(&f * &g)),
            &permute(&sigma, &f) * &permute(&sigma, &g)
        );
        prop_assert_eq!(permute(&Permutation::identity(4), &f), f);
    }

    #[test]
    fn multiplying_then_dividing_returns_the_factor(
        f in arb_poly(3, 3, 4),
        g in arb_poly(3, 3, 4),
    ) {
        prop_assume!(!g.is_zero());
        let product = &f * &g;
        prop_assert_eq!(exact_divide(&product, &g).unwrap(), Some(f));
    }

    #[test]
    fn index_word_successor_rule(letters in Just((1..=8usize).collect::<Vec<_>>()).prop_shuffle()) {
        let indices = index_word_relative(&letters);
        let position = |v: usize| letters.iter().position(|&x| x == v).unwrap();
        prop_assert_eq!(indices[position(1)], 0);
        for v in 1..8 {
            let expected = indices[position(v)] + usize::from(position(v + 1) < position(v));
            prop_assert_eq!(indices[position(v + 1)], expected);
        }
    }

    #[test]
    fn convolution_matches_sequential_action(
        a in arb_element(3),
        b in arb_element(3),
        f in arb_poly(3, 2, 4),
    ) {
        prop_assert_eq!(
            apply_element(&(&a * &b), &f),
            apply_element(&a, &apply_element(&b, &f))
        );
    }

    #[test]
    fn operator_conjugation_is_an_action(
        sigma in arb_perm(3),
        tau in arb_perm(3),
        f in arb_poly(3, 3, 3),
    ) {
        let d: QOperator = invariant_derivation(&BlockStructure::new(vec![2, 1]).unwrap(), 0, 2);
        // contravariant composition: conjugating by σ∘τ is conjugating by τ,
        // then by σ
        prop_assert_eq!(
            d.conjugate(&sigma.compose(&tau)),
            d.conjugate(&tau).conjugate(&sigma)
        );
        // and conjugation is exactly what makes the action square commute
        prop_assert_eq!(
            d.conjugate(&sigma).apply(&permute(&sigma, &f)),
            permute(&sigma, &d.apply(&f))
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn canonical_commutator_is_the_identity_functionally(f in arb_poly(2, 4, 5)) {
        let d = DifferentialOperator::<hspecht::Q>::partial(2, 1);
        let x = DifferentialOperator::multiplication(2, 1);
        let commutator = &(&d * &x) - &(&x * &d);
        prop_assert_eq!(commutator.apply(&f), f);
    }

    #[test]
    fn first_order_operators_satisfy_leibniz(
        f in arb_poly(2, 3, 4),
        g in arb_poly(2, 3, 4),
        a in 0u32..=3,
        b in 0u32..=3,
        c1 in -5i64..=5,
        c2 in -5i64..=5,
    ) {
        // D = c1·x1^a ∂1 + c2·x2^b ∂2 is a derivation
        let mut e1 = vec![0u32; 2];
        e1[0] = a;
        let mut e2 = vec![0u32; 2];
        e2[1] = b;
        let d = &DifferentialOperator::term(
            2,
            ExponentVector::new(e1),
            ExponentVector::unit(2, 1),
            q(c1, 1),
        ) + &DifferentialOperator::term(
            2,
            ExponentVector::new(e2),
            ExponentVector::unit(2, 2),
            q(c2, 1),
        );
        let product = &f * &g;
        let leibniz = &(&d.apply(&f) * &g) + &(&f * &d.apply(&g));
        prop_assert_eq!(d.apply(&product), leibniz);
    }
}

fn two_one_diagrams() -> (MultiDiagram, MultiDiagram) {
    let block = BlockStructure::new(vec![2, 1]).unwrap();
    let column = MultiDiagram::new(
        vec![
            Partition::new(vec![1, 1]).unwrap(),
            Partition::new(vec![1]).unwrap(),
        ],
        block.clone(),
    )
    .unwrap();
    let row = MultiDiagram::new(
        vec![
            Partition::new(vec![2]).unwrap(),
            Partition::new(vec![1]).unwrap(),
        ],
        block,
    )
    .unwrap();
    (row, column)
}

fn shared_solver() -> &'static FreeModuleSolver {
    static SOLVER: OnceLock<FreeModuleSolver> = OnceLock::new();
    SOLVER.get_or_init(|| {
        FreeModuleSolver::new(&BlockStructure::new(vec![2, 1]).unwrap())
            .expect("the 2,1 module decomposes freely")
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn isotypic_projections_are_idempotent_and_orthogonal(f in arb_poly(3, 3, 4)) {
        let (row, column) = two_one_diagrams();
        let p_row = isotypic_projection(&row, &f, 720).unwrap();
        let p_col = isotypic_projection(&column, &f, 720).unwrap();
        prop_assert_eq!(isotypic_projection(&row, &p_row, 720).unwrap(), p_row.clone());
        prop_assert_eq!(isotypic_projection(&column, &p_col, 720).unwrap(), p_col);
        prop_assert!(isotypic_projection(&column, &p_row, 720).unwrap().is_zero());
    }

    #[test]
    fn invariant_operators_preserve_isotypic_components(f in arb_poly(3, 3, 4)) {
        let block = BlockStructure::new(vec![2, 1]).unwrap();
        let d: QOperator = invariant_derivation(&block, 0, 2);
        let (row, column) = two_one_diagrams();
        for diagram in [&row, &column] {
            prop_assert_eq!(
                isotypic_projection(diagram, &d.apply(&f), 720).unwrap(),
                d.apply(&isotypic_projection(diagram, &f, 720).unwrap())
            );
        }
    }

    #[test]
    fn decomposition_round_trips_exactly(f in arb_poly(3, 3, 5)) {
        let solver = shared_solver();
        let result = solver.decompose(&f).unwrap();
        // reconstruct() recomputes every generator from its key, so this is
        // an independent path back to the input
        prop_assert_eq!(reconstruct(result.coefficients()).unwrap(), f);
    }
}
