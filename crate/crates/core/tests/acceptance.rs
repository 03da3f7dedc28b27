//! Acceptance suite: one PASS/FAIL line per criterion.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use dwtqft::action::{coboundary_shift, Theory};
use dwtqft::cli::{execute, Cli, Command, FormatArg};
use dwtqft::fields::{eval_word, Presentation};
use dwtqft::groups::{Cochain, FiniteGroup, GroupCocycle, GroupSpec};
use dwtqft::scalars::CyclotomicScalar;
use dwtqft::topology::{builtin_complex, builtin_presentation, cup_power_pairing, AlgebraicModel, Builtin, CohomologyMod2};
use dwtqft::tqft::{
    bordism_matrix, dim_via_torus, partition_closed, partition_product_formula, state_space, Bordism, Manifold,
    RationalMatrix, TqftError,
};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn complex(name: &str) -> Manifold {
    Manifold::Complex(builtin_complex(&name.parse::<Builtin>().unwrap()).unwrap())
}

fn w1(n: usize) -> Theory {
    Theory::w1_power(n).unwrap()
}

fn test_groups() -> Vec<(&'static str, FiniteGroup)> {
    vec![
        ("Z/2", FiniteGroup::cyclic(2).unwrap()),
        ("Z/3", FiniteGroup::cyclic(3).unwrap()),
        ("Z/4", FiniteGroup::cyclic(4).unwrap()),
        ("Z/2xZ/2", FiniteGroup::build(&GroupSpec::Product(vec![GroupSpec::Cyclic(2), GroupSpec::Cyclic(2)])).unwrap()),
        ("S3", FiniteGroup::symmetric(3).unwrap()),
    ]
}

/// Counts homomorphisms by trying every tuple of generator images.
fn brute_force_hom_count(p: &Presentation, g: &FiniteGroup) -> u64 {
    let n = p.generator_count();
    let mut assignment = vec![0usize; n];
    let mut count = 0;
    loop {
        if p.relators().iter().all(|w| eval_word(g, w, &assignment) == g.identity()) {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == n {
                return count;
            }
            assignment[i] += 1;
            if assignment[i] < g.order() {
                break;
            }
            assignment[i] = 0;
            i += 1;
        }
    }
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut values = Vec::new();
    for g in 0..=3u32 {
        let z = partition_closed(&w1(2), &complex(&format!("sigma({g})"))).map_err(|e| e.to_string())?;
        let expected = CyclotomicScalar::from_rational(1, BigRational::new(BigInt::from(2).pow(2 * g), BigInt::from(2))).unwrap();
        ensure(z == expected, || format!("Σ_{g}: got {z}, expected {expected}"))?;
        values.push(z.to_string());
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(10), || format!("took {elapsed:?}"))?;
    Ok(format!("Z(Σ_0..3) = {} in {elapsed:.2?}", values.join(", ")))
}

fn criterion_2() -> Outcome {
    let zero = CyclotomicScalar::integer(0);
    let circle = partition_closed(&w1(1), &complex("circle")).map_err(|e| e.to_string())?;
    ensure(circle == zero, || format!("S¹: {circle}"))?;
    let rp2 = partition_closed(&w1(2), &complex("rp2")).map_err(|e| e.to_string())?;
    ensure(rp2 == zero, || format!("RP²: {rp2}"))?;
    for n in [3, 4] {
        let x = Manifold::Model(AlgebraicModel::real_projective(n).unwrap());
        let formula = partition_product_formula(&w1(n), &x).map_err(|e| e.to_string())?;
        let direct = partition_closed(&w1(n), &x).map_err(|e| e.to_string())?;
        ensure(formula == zero && direct == zero, || format!("RP^{n}: formula {formula}, enumeration {direct}"))?;
    }
    Ok("S¹, RP², RP³, RP⁴ all give 0".into())
}

fn criterion_3() -> Outcome {
    for (m, l) in [(1, 1), (2, 1), (1, 2)] {
        let x = Manifold::Model(AlgebraicModel::dold(m, l).unwrap());
        let z = partition_closed(&w1(m + 2 * l), &x).map_err(|e| e.to_string())?;
        ensure(z == CyclotomicScalar::integer(1), || format!("P({m},{l}): {z}"))?;
    }
    Ok("P(1,1), P(2,1), P(1,2) all give 1".into())
}

fn criterion_4() -> Outcome {
    let circle = Presentation::parse(1, &[]).unwrap();
    let sectors = state_space(&w1(2), &circle).map_err(|e| e.to_string())?.dimension;
    let torus = dim_via_torus(&w1(2), &circle).map_err(|e| e.to_string())?;
    let beta1 = CohomologyMod2::compute(&builtin_complex(&Builtin::Circle).unwrap()).betti()[1];
    let expected = 1usize << beta1;
    ensure(sectors == expected, || format!("transgression gives {sectors}"))?;
    ensure(torus == CyclotomicScalar::integer(expected as i64), || format!("torus state sum gives {torus}"))?;
    Ok(format!("dim = {sectors} (transgression) = {torus} (torus) = 2^{beta1}"))
}

fn criterion_5() -> Outcome {
    let names = [
        "circle", "sphere2", "sphere3", "torus", "torus_grid", "torus3", "klein", "rp2", "sigma(2)", "sigma(3)",
        "disjoint_union(torus,klein)",
    ];
    let mut pairs = 0;
    for name in names {
        let b: Builtin = name.parse().unwrap();
        let x = Manifold::Complex(builtin_complex(&b).unwrap());
        let p = builtin_presentation(&b);
        for (gname, g) in test_groups() {
            let z = partition_closed(&Theory::untwisted(g.clone()), &x).map_err(|e| e.to_string())?;
            let count = brute_force_hom_count(&p, &g);
            let expected = BigRational::new(BigInt::from(count), BigInt::from(g.order()).pow(p.component_count() as u32));
            let expected = CyclotomicScalar::from_rational(1, expected).unwrap();
            ensure(z == expected, || format!("{name} with {gname}: {z} vs #Hom/|Γ| = {expected}"))?;
            pairs += 1;
        }
    }
    Ok(format!("{pairs} (manifold, group) pairs agree"))
}

fn criterion_6() -> Outcome {
    let surfaces = ["sphere2", "torus", "torus_grid", "klein", "rp2", "sigma(2)", "sigma(3)"];
    for name in surfaces {
        let x = complex(name);
        let formula = partition_product_formula(&w1(2), &x).map_err(|e| e.to_string())?;
        let direct = partition_closed(&w1(2), &x).map_err(|e| e.to_string())?;
        ensure(formula == direct, || format!("{name}: formula {formula}, enumeration {direct}"))?;
    }
    let refused = |t: &Theory, x: &Manifold| matches!(partition_product_formula(t, x), Err(TqftError::Refused(_)));
    ensure(refused(&w1(3), &complex("torus3")), || "T³ with n = 3 was not refused".into())?;
    let product = AlgebraicModel::surface(1).unwrap().product(&AlgebraicModel::real_projective(1).unwrap()).unwrap();
    ensure(refused(&w1(3), &Manifold::Model(product)), || "T²×S¹ model with n = 3 was not refused".into())?;
    Ok(format!("{} surfaces agree; β₁ = 3, n = 3 refused", surfaces.len()))
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let circle = Presentation::parse(1, &[]).unwrap();
    let mut checks = 0;
    for (gname, g) in test_groups() {
        let t = Theory::untwisted(g.clone());
        let m = |b: &Bordism| bordism_matrix(&t, b).map(|r| r.matrix).map_err(|e| format!("{gname}: {e}"));

        let cyl = m(&Bordism::cylinder(&circle))?;
        ensure(cyl == RationalMatrix::identity(cyl.rows()), || format!("{gname}: cylinder is not the identity"))?;

        let pairs = [
            (Bordism::cylinder(&circle), Bordism::cylinder(&circle)),
            (Bordism::cup(), Bordism::cylinder(&circle)),
            (Bordism::copants(), Bordism::pants()),
            (Bordism::pants(), Bordism::copants()),
            (Bordism::cup(), Bordism::handle()),
            (Bordism::handle(), Bordism::cap()),
            (Bordism::cup().disjoint(&Bordism::cylinder(&circle)), Bordism::pants()),
        ];
        for (i, (a, b)) in pairs.iter().enumerate() {
            let glued = m(&a.then(b).map_err(|e| e.to_string())?)?;
            ensure(glued == m(b)?.mul(&m(a)?), || format!("{gname}: composition pair {i}"))?;
            checks += 1;
        }

        let (a, b) = (Bordism::pants(), Bordism::cup());
        ensure(m(&a.disjoint(&b))? == m(&a)?.kron(&m(&b)?), || format!("{gname}: disjoint union"))?;

        let sphere = m(&Bordism::cup().then(&Bordism::cap()).map_err(|e| e.to_string())?)?;
        let inv = BigRational::new(BigInt::from(1), BigInt::from(g.order()));
        ensure(sphere.get(0, 0) == &inv, || format!("{gname}: disk∘disk = {}", sphere.get(0, 0)))?;

        let torus = partition_closed(&t, &complex("torus")).map_err(|e| e.to_string())?;
        let trace = CyclotomicScalar::from_rational(1, cyl.trace()).unwrap();
        ensure(trace == torus, || format!("{gname}: trace {trace} vs Z(T²) {torus}"))?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(30), || format!("took {elapsed:?}"))?;
    Ok(format!("5 groups, {checks} composable pairs, in {elapsed:.2?}"))
}

fn random_eta(g: &FiniteGroup, rng: &mut ChaCha8Rng) -> Cochain {
    let e = g.identity();
    Cochain::from_fn(g, 1, 2, |a| if a[0] == e { 0 } else { rng.gen_range(0..2) })
}

fn criterion_8() -> Outcome {
    let v4 = FiniteGroup::build(&GroupSpec::Product(vec![GroupSpec::Cyclic(2), GroupSpec::Cyclic(2)])).unwrap();
    let omega = GroupCocycle::from_fn(&v4, 2, 2, |a| ((a[0] >> 1) & a[1] & 1) as i64).unwrap();
    let theory = Theory::cocycle(omega).unwrap();
    let surfaces = ["torus", "torus_grid", "klein", "rp2", "sigma(2)"];
    let base: Vec<CyclotomicScalar> =
        surfaces.iter().map(|s| partition_closed(&theory, &complex(s))).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for i in 0..100 {
        let shifted = coboundary_shift(&theory, &random_eta(&v4, &mut rng)).map_err(|e| e.to_string())?;
        for (s, z) in surfaces.iter().zip(&base) {
            let z2 = partition_closed(&shifted, &complex(s)).map_err(|e| e.to_string())?;
            ensure(&z2 == z, || format!("shift {i} changes Z({s}) from {z} to {z2}"))?;
        }
    }

    let mut theories = vec![w1(2), theory];
    theories.extend(test_groups().into_iter().map(|(_, g)| Theory::untwisted(g)));
    for t in &theories {
        let a = partition_closed(t, &complex("torus")).map_err(|e| e.to_string())?;
        let b = partition_closed(t, &complex("torus_grid")).map_err(|e| e.to_string())?;
        ensure(a == b, || format!("torus models disagree: {a} vs {b}"))?;
    }

    let mut pairs = 0;
    for s in ["torus", "torus_grid", "klein", "rp2", "sigma(2)", "sigma(3)"] {
        let k = builtin_complex(&s.parse().unwrap()).unwrap();
        let classes = CohomologyMod2::compute(&k).all_classes(&k);
        for u in &classes {
            for v in &classes {
                let lhs = cup_power_pairing(&k, &u.add(v)).unwrap();
                let rhs = cup_power_pairing(&k, u).unwrap() ^ cup_power_pairing(&k, v).unwrap();
                ensure(lhs == rhs, || format!("τ not additive on {s}"))?;
                pairs += 1;
            }
        }
    }
    Ok(format!(
        "100 shifts on {} surfaces, {} theories on both tori, τ additive on {pairs} pairs",
        surfaces.len(),
        theories.len()
    ))
}

fn run_full_manifest(jobs: usize) -> Result<Vec<u8>, String> {
    let manifest = concat!(env!("CARGO_MANIFEST_DIR"), "/manifests/full.json").into();
    let cli = Cli { command: Command::Run { manifest, jobs, format: FormatArg::Json, seed: 7 } };
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = execute(cli, &mut out, &mut err);
    if code != 0 {
        return Err(format!("exit code {code}: {}", String::from_utf8_lossy(&err)));
    }
    Ok(out)
}

fn criterion_9() -> Outcome {
    let one = run_full_manifest(1)?;
    let eight = run_full_manifest(8)?;
    ensure(one == eight, || "outputs differ between --jobs 1 and --jobs 8".into())?;
    Ok(format!("{} identical bytes", one.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("surfaces under w1^2", criterion_1),
        ("projective spaces", criterion_2),
        ("Dold manifolds", criterion_3),
        ("circle state space dimension", criterion_4),
        ("untwisted groupoid cardinality", criterion_5),
        ("product formula", criterion_6),
        ("TQFT properties", criterion_7),
        ("well-definedness", criterion_8),
        ("determinism", criterion_9),
    ];
    let mut failures = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                failures += 1;
                println!("criterion {}: FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
