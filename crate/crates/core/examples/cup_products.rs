//! Mod-2 cohomology and cup powers on triangulated manifolds.

use dwtqft::topology::{builtin_complex, cup_power_pairing, Builtin, CohomologyMod2};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for name in ["torus", "klein", "rp2", "sigma(2)", "torus3"] {
        let b: Builtin = name.parse()?;
        let k = builtin_complex(&b)?;
        let h = CohomologyMod2::compute(&k);
        let tau: Vec<u8> = h.h1_basis().iter().map(|v| cup_power_pairing(&k, v).map(u8::from)).collect::<Result<_, _>>()?;
        println!(
            "{name:>9}: χ = {:>2}, betti mod 2 = {:?}, orientable = {}, τ on H¹ basis = {tau:?}",
            k.euler_characteristic(),
            h.betti(),
            k.orientation().is_some()
        );
    }
    Ok(())
}
