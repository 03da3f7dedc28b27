//! State spaces of circles and their dimensions via `Y × S¹`.

use dwtqft::action::Theory;
use dwtqft::fields::Presentation;
use dwtqft::groups::{FiniteGroup, GroupCocycle, GroupSpec};
use dwtqft::tqft::{dim_via_torus, state_space};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let circle = Presentation::parse(1, &[])?;
    let v4 = FiniteGroup::build(&GroupSpec::Product(vec![GroupSpec::Cyclic(2), GroupSpec::Cyclic(2)]))?;
    let bilinear = GroupCocycle::from_fn(&v4, 2, 2, |a| ((a[0] >> 1) & a[1] & 1) as i64)?;
    let theories = [
        ("untwisted S3", Theory::untwisted(FiniteGroup::symmetric(3)?)),
        ("w1²", Theory::w1_power(2)?),
        ("Z/2×Z/2 twisted", Theory::cocycle(bilinear)?),
    ];
    for (name, t) in &theories {
        let s = state_space(t, &circle)?;
        println!("{name}: dim Ẑ(S¹) = {} by sectors, {} by the torus", s.dimension, dim_via_torus(t, &circle)?);
    }
    Ok(())
}
