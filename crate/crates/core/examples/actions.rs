//! Values of the topological action on individual fields.

use dwtqft::action::{action_value, ManifoldRef, Theory};
use dwtqft::fields::flat_fields_on_complex;
use dwtqft::topology::{builtin_complex, Builtin};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let theory = Theory::w1_power(2)?;
    for b in [Builtin::Rp2, Builtin::Klein, Builtin::Torus] {
        let k = builtin_complex(&b)?;
        let values: Vec<String> = flat_fields_on_complex(&k, theory.group())?
            .iter()
            .map(|f| action_value(&theory, ManifoldRef::Complex(&k), f).map(|a| a.scalar.to_string()))
            .collect::<Result<_, _>>()?;
        println!("{b}: φ(S) over all fields = {values:?}");
    }
    Ok(())
}
