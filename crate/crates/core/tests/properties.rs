//! Property tests for the invariants of paths, crystals, words and
//! characters.

use std::collections::BTreeMap;

use gkm_crystal::crystal::{generate, GenerateOptions};
use gkm_crystal::demazure::{demazure_character, demazure_crystal, demazure_real, StageLimits};
use gkm_crystal::index::{ordered_index, IndexWord};
use gkm_crystal::monoid::{
    check_lemma_422, is_dominant_reduced, satisfies_condition_4, satisfies_condition_5, to_minimal_dominant_reduced,
    BlockForm, MonoidWord, DEFAULT_REWRITE_BUDGET,
};
use gkm_crystal::verify::fixture;
use gkm_crystal::{Rational, RationalCharacter, RationalPath, RationalWeight};
use proptest::prelude::*;

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn arb_character() -> impl Strategy<Value = RationalCharacter> {
    prop::collection::vec((0usize..5, -3i64..=3, -3i64..=3, -3i64..=3), 1..6).prop_map(|terms| {
        RationalCharacter::from_terms(
            terms.into_iter().map(|(b, c1, c2, k)| {
                (RationalWeight::base_weight(b).minus_root(0, &q(c1)).minus_root(1, &q(c2)), k)
            }),
            None,
        )
    })
}

/// Follows `word` from `π_λ`, skipping letters that give zero.
fn walk(fx: &str, weight: &str, word: &[usize]) -> RationalPath {
    let d = fixture(fx).unwrap();
    let mut p = RationalPath::straight(&RationalWeight::named(&d, weight).unwrap());
    for &i in word {
        if let Some(q) = p.f_op(&d, i).unwrap() {
            p = q;
        }
    }
    p
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn demazure_real_is_idempotent(ch in arb_character(), i in 0usize..2) {
        let d = fixture("a2").unwrap();
        let once = demazure_real(&d, &ch, i).unwrap();
        prop_assert_eq!(demazure_real(&d, &once, i).unwrap(), once);
    }

    #[test]
    fn demazure_real_on_dominant_monomials(b in 0usize..5, c1 in -3i64..=3, c2 in -3i64..=3, i in 0usize..2) {
        let d = fixture("a2").unwrap();
        let mu = RationalWeight::base_weight(b).minus_root(0, &q(c1)).minus_root(1, &q(c2));
        let n = mu.pairing(&d, i).to_integer();
        prop_assume!(n >= 0.into());
        let out = demazure_real(&d, &RationalCharacter::monomial(mu), i).unwrap();
        prop_assert!(out.terms().values().all(|&c| c > 0));
        prop_assert_eq!(num_bigint::BigInt::from(out.total()), n + 1);
    }

    #[test]
    fn product_is_commutative(a in arb_character(), b in arb_character()) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert!(a.add(&b).sub(&b) == a);
    }

    #[test]
    fn lowering_and_raising_are_partial_inverses(
        word in prop::collection::vec(0usize..2, 0..8),
        fx in prop::sample::select(vec!["a2", "b2", "mixed"]),
        i in 0usize..2,
    ) {
        let d = fixture(fx).unwrap();
        let p = walk(fx, "lam11", &word);
        if let Some(lower) = p.f_op(&d, i).unwrap() {
            prop_assert_eq!(lower.wt(), p.wt().minus_root(i, &q(1)));
            let back =
                if d.is_real(i) { lower.e_op_real(&d, i).unwrap() } else { lower.e_op_imaginary_raw(&d, i).unwrap() };
            prop_assert_eq!(back, Some(p.clone()));
        }
        if d.is_real(i) {
            if let Some(upper) = p.e_op_real(&d, i).unwrap() {
                prop_assert_eq!(upper.f_op(&d, i).unwrap(), Some(p.clone()));
            }
            let phi = p.phi(&d, i).unwrap();
            prop_assert_eq!(q(phi - p.eps(&d, i)), p.wt().pairing(&d, i));
        }
    }

    #[test]
    fn ordered_index_is_generic_and_ordered(word in prop::collection::vec(0usize..3, 0..14)) {
        let d = fixture("ex222").unwrap();
        let w = ordered_index(&d, &word);
        prop_assert!(w.is_ordered(&d));
        prop_assert!(w.is_generic(&d));
        prop_assert_eq!(w.erase_copies(), word);
    }

    #[test]
    fn copy_permutations_preserve_genericity(word in prop::collection::vec(0usize..3, 0..10), shift in 0usize..5) {
        let d = fixture("ex222").unwrap();
        let w = ordered_index(&d, &word);
        let n = 10;
        let perm: BTreeMap<usize, usize> = (1..=n).map(|m| (m, (m - 1 + shift) % n + 1)).collect();
        let perms = BTreeMap::from([(1, perm.clone()), (2, perm)]);
        let out: IndexWord = w.omega_apply(&d, &perms).unwrap();
        prop_assert!(out.is_generic(&d));
        prop_assert_eq!(out.erase_copies(), w.erase_copies());
    }

    /// Normal forms of admissible words on the mixed datum: same action on
    /// `λ`, no longer than the input, dominant reduced, Lemma properties, and
    /// the character formula against the crystal enumeration.
    #[test]
    fn normal_forms_on_mixed(
        word in prop::collection::vec(0usize..2, 0..6),
        weight in prop::sample::select(vec!["lam10", "lam01", "lam11"]),
    ) {
        let d = fixture("mixed").unwrap();
        let lam = RationalWeight::named(&d, weight).unwrap();
        let w = MonoidWord::new(word);
        prop_assume!(satisfies_condition_4(&d, &w, &lam) && satisfies_condition_5(&d, &w, &lam));
        let f = to_minimal_dominant_reduced(&d, &w, &lam, DEFAULT_REWRITE_BUDGET).unwrap();
        prop_assert_eq!(f.to_word().act(&d, &lam), w.act(&d, &lam));
        prop_assert!(f.length(&d) <= w.len());
        prop_assert!(is_dominant_reduced(&d, &f));
        prop_assert!(check_lemma_422(&d, &f, &lam).all_hold());
        let limits = StageLimits::default();
        let set = demazure_crystal(&d, &lam, &f, &limits).unwrap();
        let ch = RationalCharacter::from_terms(set.iter().map(|p| (p.wt(), 1)), None);
        prop_assert_eq!(demazure_character(&d, &lam, &f, 64).unwrap(), ch);

        // deleting the leftmost real block shrinks the crystal
        let mut blocks = f.real_blocks().to_vec();
        if let Some(last) = blocks.last_mut() {
            last.clear();
        }
        let v = BlockForm::new(&d, blocks, f.imaginary().to_vec()).unwrap();
        let smaller = demazure_crystal(&d, &lam, &v, &limits).unwrap();
        prop_assert!(smaller.is_subset(&set));
    }

    /// Every Demazure crystal node is a node of the crystal.
    #[test]
    fn demazure_crystal_inside_crystal(word in prop::collection::vec(0usize..2, 0..6)) {
        let d = fixture("mixed").unwrap();
        let lam = RationalWeight::named(&d, "lam11").unwrap();
        let w = MonoidWord::new(word);
        prop_assume!(satisfies_condition_4(&d, &w, &lam) && satisfies_condition_5(&d, &w, &lam));
        let f = to_minimal_dominant_reduced(&d, &w, &lam, DEFAULT_REWRITE_BUDGET).unwrap();
        let set = demazure_crystal(&d, &lam, &f, &StageLimits::default()).unwrap();
        let depth = set.iter().map(|p| p.depth().to_integer()).max().unwrap();
        let g = generate(&d, &lam, depth.try_into().unwrap(), &GenerateOptions::default()).unwrap();
        prop_assert!(set.iter().all(|p| g.find(p).is_some()));
    }
}
