use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use dwtqft::fields::{
    coloring_orbits, enumerate_homs, eval_word, flat_fields_on_complex, groupoid_cardinality, hom_orbits,
    Presentation, Word,
};
use dwtqft::groups::{FiniteGroup, GroupSpec};
use dwtqft::topology::{builtin_complex, builtin_presentation, Builtin};

fn groups() -> Vec<FiniteGroup> {
    vec![
        FiniteGroup::cyclic(2).unwrap(),
        FiniteGroup::cyclic(3).unwrap(),
        FiniteGroup::cyclic(4).unwrap(),
        FiniteGroup::build(&GroupSpec::Product(vec![GroupSpec::Cyclic(2), GroupSpec::Cyclic(2)])).unwrap(),
        FiniteGroup::symmetric(3).unwrap(),
    ]
}

fn all_tuples(order: usize, n: usize) -> Vec<Vec<usize>> {
    (0..order.pow(n as u32))
        .map(|mut x| {
            let mut digits = vec![0; n];
            for d in digits.iter_mut().rev() {
                *d = x % order;
                x /= order;
            }
            digits
        })
        .collect()
}

fn word_strategy(generators: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((1..=generators as i32, any::<bool>()), 1..7)
        .prop_map(|letters| letters.into_iter().map(|(g, inv)| if inv { -g } else { g }).collect())
}

fn presentation_strategy() -> impl Strategy<Value = Presentation> {
    (1usize..=3).prop_flat_map(|n| {
        prop::collection::vec(word_strategy(n), 0..3).prop_map(move |rels| Presentation::new(n, rels).unwrap())
    })
}

#[test]
fn homs_match_naive_enumeration() {
    for g in groups() {
        for name in ["torus", "klein", "rp2", "torus3", "sigma(2)"] {
            let p = builtin_presentation(&name.parse().unwrap());
            let naive: Vec<Vec<usize>> = all_tuples(g.order(), p.generator_count())
                .into_iter()
                .filter(|t| p.relators().iter().all(|w| eval_word(&g, w, t) == g.identity()))
                .collect();
            let fast: Vec<Vec<usize>> = enumerate_homs(&p, &g).unwrap().iter().map(|f| f.values().to_vec()).collect();
            assert_eq!(fast, naive, "{name}");
        }
    }
}

#[test]
fn every_builtin_complex_matches_its_presentation() {
    let names = ["circle", "sphere2", "sphere3", "torus", "torus_grid", "torus3", "klein", "rp2", "sigma(2)", "sigma(3)"];
    for name in names {
        let b: Builtin = name.parse().unwrap();
        let k = builtin_complex(&b).unwrap();
        for g in groups() {
            let a = flat_fields_on_complex(&k, &g).unwrap().len();
            let p = enumerate_homs(&builtin_presentation(&b), &g).unwrap().len();
            assert_eq!(a, p, "{name} with |Γ| = {}", g.order());
            let by_colorings = groupoid_cardinality(&coloring_orbits(&k, &g).unwrap());
            let by_homs = groupoid_cardinality(&hom_orbits(&builtin_presentation(&b), &g).unwrap());
            assert_eq!(by_colorings, by_homs, "{name}");
        }
    }
}

#[test]
fn enumeration_order_does_not_depend_on_threads() {
    let p = Presentation::surface(2);
    let g = FiniteGroup::symmetric(3).unwrap();
    let run = |threads| {
        rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap().install(|| enumerate_homs(&p, &g).unwrap())
    };
    assert_eq!(run(1), run(6));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn orbit_bookkeeping(p in presentation_strategy(), gi in 0..5usize) {
        let g = &groups()[gi];
        let homs = enumerate_homs(&p, g).unwrap();
        let orbits = hom_orbits(&p, g).unwrap();
        prop_assert_eq!(orbits.iter().map(|o| o.orbit_size).sum::<usize>(), homs.len());
        for o in &orbits {
            prop_assert_eq!(o.orbit_size * o.stabilizer_order, g.order());
        }
        let expected = BigRational::new(BigInt::from(homs.len()), BigInt::from(g.order()));
        prop_assert_eq!(groupoid_cardinality(&orbits), expected);
    }

    #[test]
    fn disjoint_union_multiplies_counts(a in presentation_strategy(), b in presentation_strategy(), gi in 0..5usize) {
        let g = &groups()[gi];
        let ab = a.disjoint_union(&b);
        let count = |p: &Presentation| enumerate_homs(p, g).unwrap().len();
        prop_assert_eq!(count(&ab), count(&a) * count(&b));
        let card = |p: &Presentation| groupoid_cardinality(&hom_orbits(p, g).unwrap());
        prop_assert_eq!(card(&ab), card(&a) * card(&b));
    }

    #[test]
    fn tietze_simplification_keeps_hom_counts(p in presentation_strategy(), gi in 0..5usize) {
        let g = &groups()[gi];
        prop_assert_eq!(enumerate_homs(&p.simplified(), g).unwrap().len(), enumerate_homs(&p, g).unwrap().len());
    }
}
