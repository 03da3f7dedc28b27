//! Linear maps of bordisms and the gluing law.

use dwtqft::action::Theory;
use dwtqft::groups::FiniteGroup;
use dwtqft::tqft::{bordism_matrix, Bordism};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let theory = Theory::untwisted(FiniteGroup::symmetric(3)?);
    let pants = bordism_matrix(&theory, &Bordism::pants())?.matrix;
    let copants = bordism_matrix(&theory, &Bordism::copants())?.matrix;
    println!("pants: {pants}");

    let glued = Bordism::copants().then(&Bordism::pants())?;
    let direct = bordism_matrix(&theory, &glued)?.matrix;
    println!("glued = product: {}", direct == pants.mul(&copants));

    let mut surface = Bordism::cup();
    for genus in 0..3 {
        let closed = surface.then(&Bordism::cap())?;
        println!("Z(Σ_{genus}) = {}", bordism_matrix(&theory, &closed)?.matrix.get(0, 0));
        surface = surface.then(&Bordism::handle())?;
    }
    Ok(())
}
