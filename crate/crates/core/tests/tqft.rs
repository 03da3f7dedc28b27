use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use dwtqft::action::Theory;
use dwtqft::fields::Presentation;
use dwtqft::groups::{FiniteGroup, GroupCocycle, GroupSpec};
use dwtqft::scalars::CyclotomicScalar;
use dwtqft::topology::{builtin_complex, AlgebraicModel, Builtin};
use dwtqft::tqft::{
    bordism_matrix, dim_via_torus, partition_by_fields, partition_closed, partition_product_formula, state_space,
    Bordism, Manifold, RationalMatrix,
};

fn circle() -> Presentation {
    Presentation::parse(1, &[]).unwrap()
}

fn groups() -> Vec<FiniteGroup> {
    vec![FiniteGroup::cyclic(2).unwrap(), FiniteGroup::cyclic(3).unwrap(), FiniteGroup::symmetric(3).unwrap()]
}

/// Irreducible degrees, for `Σ_χ (|Γ|/χ(1))^{2g−2}`.
fn irrep_degrees(g: &FiniteGroup) -> Vec<i64> {
    match g.order() {
        6 if !g.is_abelian() => vec![1, 1, 2],
        n => vec![1; n],
    }
}

fn mednykh(g: &FiniteGroup, genus: i32) -> BigRational {
    irrep_degrees(g)
        .iter()
        .map(|&d| {
            let base = BigRational::new(BigInt::from(g.order()), BigInt::from(d));
            num_traits::pow::Pow::pow(base, 2 * genus - 2)
        })
        .fold(BigRational::zero(), |a, b| a + b)
}

fn matrix(t: &Theory, b: &Bordism) -> RationalMatrix {
    bordism_matrix(t, b).unwrap().matrix
}

/// Random `S¹ → S¹` bordism built from the generators.
fn random_endo(rng: &mut ChaCha8Rng, small: bool) -> Bordism {
    match rng.gen_range(0..if small { 3 } else { 4 }) {
        0 => Bordism::cylinder(&circle()),
        1 => Bordism::handle(),
        2 => Bordism::cap().then(&Bordism::cup()).unwrap(),
        _ => Bordism::copants().then(&Bordism::pants()).unwrap(),
    }
}

#[test]
fn closed_surfaces_from_handles_match_character_formula() {
    for g in groups() {
        let t = Theory::untwisted(g.clone());
        let mut b = Bordism::cup();
        for genus in 0..=2 {
            let z = matrix(&t, &b.then(&Bordism::cap()).unwrap());
            assert_eq!(z.get(0, 0), &mednykh(&g, genus), "genus {genus}, order {}", g.order());
            let closed = partition_closed(&t, &Manifold::Presentation(Presentation::surface(genus as usize))).unwrap();
            assert_eq!(closed, CyclotomicScalar::from_rational(1, mednykh(&g, genus)).unwrap());
            b = b.then(&Bordism::handle()).unwrap();
        }
    }
}

#[test]
fn random_chains_compose_functorially() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for g in groups() {
        let t = Theory::untwisted(g);
        for _ in 0..6 {
            let small = t.group().order() > 3;
            let len = if small { 2 } else { rng.gen_range(2..4) };
            let pieces: Vec<Bordism> = (0..len).map(|_| random_endo(&mut rng, small)).collect();
            let glued = pieces[1..].iter().fold(pieces[0].clone(), |acc, p| acc.then(p).unwrap());
            let product = pieces[1..].iter().fold(matrix(&t, &pieces[0]), |acc, p| matrix(&t, p).mul(&acc));
            assert_eq!(matrix(&t, &glued), product);
        }
    }
}

#[test]
fn disjoint_unions_are_tensor_products() {
    let builders: [fn() -> Bordism; 5] =
        [Bordism::cup, Bordism::cap, Bordism::pants, Bordism::copants, Bordism::handle];
    for g in groups() {
        let t = Theory::untwisted(g);
        for a in &builders {
            for b in &builders {
                let (a, b) = (a(), b());
                assert_eq!(matrix(&t, &a.disjoint(&b)), matrix(&t, &a).kron(&matrix(&t, &b)));
            }
        }
    }
}

#[test]
fn cylinders_are_identities() {
    let objects = [circle(), circle().disjoint_union(&circle()), Presentation::surface(1), Presentation::trivial()];
    for g in groups() {
        let t = Theory::untwisted(g);
        for y in &objects {
            let m = matrix(&t, &Bordism::cylinder(y));
            assert_eq!(m, RationalMatrix::identity(state_space(&t, y).unwrap().dimension));
        }
    }
}

#[test]
fn trace_of_cylinder_is_torus() {
    for g in groups() {
        let t = Theory::untwisted(g);
        let trace = matrix(&t, &Bordism::cylinder(&circle())).trace();
        let torus = partition_closed(&t, &Manifold::Complex(builtin_complex(&Builtin::Torus).unwrap())).unwrap();
        assert_eq!(CyclotomicScalar::from_rational(1, trace).unwrap(), torus);
    }
}

#[test]
fn pairing_and_copairing_are_inverse() {
    // Zigzag identity for the pairing and copairing.
    for g in groups() {
        let t = Theory::untwisted(g);
        let pairing = matrix(&t, &Bordism::pants().then(&Bordism::cap()).unwrap());
        let copairing = matrix(&t, &Bordism::cup().then(&Bordism::copants()).unwrap());
        let n = state_space(&t, &circle()).unwrap().dimension;
        let id_n = RationalMatrix::identity(n);
        let left = id_n.kron(&pairing);
        let right = copairing.kron(&id_n);
        assert_eq!(left.mul(&right), id_n);
    }
}

#[test]
fn state_space_dimension_matches_torus_route() {
    let v4 = FiniteGroup::build(&GroupSpec::Product(vec![GroupSpec::Cyclic(2), GroupSpec::Cyclic(2)])).unwrap();
    let mut theories: Vec<Theory> = groups().into_iter().map(Theory::untwisted).collect();
    theories.push(Theory::untwisted(v4.clone()));
    theories.push(Theory::w1_power(2).unwrap());
    theories.push(Theory::cocycle(GroupCocycle::from_fn(&v4, 2, 2, |a| ((a[0] >> 1) & a[1] & 1) as i64).unwrap()).unwrap());
    let z4 = FiniteGroup::cyclic(4).unwrap();
    theories.push(Theory::cocycle(GroupCocycle::from_fn(&z4, 2, 4, |a| (a[0] * a[1]) as i64).unwrap()).unwrap());
    let circles = [Presentation::empty(), circle(), circle().disjoint_union(&circle())];
    for t in &theories {
        for y in &circles {
            let dim = state_space(t, y).unwrap().dimension;
            assert_eq!(dim_via_torus(t, y).unwrap(), CyclotomicScalar::integer(dim as i64));
        }
        if t.is_untwisted() {
            for y in [Presentation::surface(1), Presentation::parse(1, &["aa"]).unwrap()] {
                let dim = state_space(t, &y).unwrap().dimension;
                assert_eq!(dim_via_torus(t, &y).unwrap(), CyclotomicScalar::integer(dim as i64));
            }
        }
    }
}

#[test]
fn twisted_dimension_is_at_most_the_untwisted_one() {
    let v4 = FiniteGroup::build(&GroupSpec::Product(vec![GroupSpec::Cyclic(2), GroupSpec::Cyclic(2)])).unwrap();
    let twisted = Theory::cocycle(GroupCocycle::from_fn(&v4, 2, 2, |a| ((a[0] >> 1) & a[1] & 1) as i64).unwrap()).unwrap();
    let untwisted = Theory::untwisted(v4);
    let s = state_space(&twisted, &circle()).unwrap();
    assert!(s.dimension <= state_space(&untwisted, &circle()).unwrap().dimension);
    assert_eq!(s.dimension, s.basis.len());
    assert_eq!(s.stabilizers, vec![4]);
}

#[test]
fn product_formula_on_models() {
    let models = [
        AlgebraicModel::real_projective(2).unwrap(),
        AlgebraicModel::real_projective(4).unwrap(),
        AlgebraicModel::klein().unwrap(),
        AlgebraicModel::surface(3).unwrap(),
        AlgebraicModel::dold(2, 1).unwrap(),
        AlgebraicModel::surface(1).unwrap().product(&AlgebraicModel::surface(1).unwrap()).unwrap(),
        AlgebraicModel::real_projective(2).unwrap().product(&AlgebraicModel::real_projective(2).unwrap()).unwrap(),
    ];
    for m in models {
        let t = Theory::w1_power(m.dimension()).unwrap();
        let x = Manifold::Model(m.clone());
        let direct = partition_closed(&t, &x).unwrap();
        assert_eq!(partition_product_formula(&t, &x).unwrap(), direct, "{}", m.name());
        assert_eq!(partition_by_fields(&t, &x).unwrap(), direct, "{}", m.name());
    }
}

#[test]
fn fields_route_agrees_on_complexes() {
    let v4 = FiniteGroup::build(&GroupSpec::Product(vec![GroupSpec::Cyclic(2), GroupSpec::Cyclic(2)])).unwrap();
    let theories = [
        Theory::w1_power(2).unwrap(),
        Theory::cocycle(GroupCocycle::from_fn(&v4, 2, 2, |a| ((a[0] >> 1) & a[1] & 1) as i64).unwrap()).unwrap(),
        Theory::untwisted(FiniteGroup::symmetric(3).unwrap()),
    ];
    for t in &theories {
        for name in ["torus", "torus_grid", "klein", "rp2", "sigma(2)", "disjoint_union(torus,rp2)"] {
            let x = Manifold::Complex(builtin_complex(&name.parse().unwrap()).unwrap());
            assert_eq!(partition_closed(t, &x).unwrap(), partition_by_fields(t, &x).unwrap(), "{name}");
        }
    }
}

#[test]
fn sphere_gives_inverse_group_order() {
    for g in groups() {
        let t = Theory::untwisted(g.clone());
        let z = matrix(&t, &Bordism::cup().then(&Bordism::cap()).unwrap());
        assert_eq!(z.get(0, 0) * BigRational::from_integer(BigInt::from(g.order())), BigRational::one());
        let s2 = partition_closed(&t, &Manifold::Complex(builtin_complex(&Builtin::Sphere2).unwrap())).unwrap();
        assert_eq!(CyclotomicScalar::from_rational(1, z.get(0, 0).clone()).unwrap(), s2);
    }
}
