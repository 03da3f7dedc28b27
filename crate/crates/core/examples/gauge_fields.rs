//! Gauge fields as homomorphisms or flat colorings, and their orbits.

use dwtqft::fields::{coloring_orbits, enumerate_homs, groupoid_cardinality, hom_orbits, Presentation};
use dwtqft::groups::FiniteGroup;
use dwtqft::topology::{builtin_complex, Builtin};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let s3 = FiniteGroup::symmetric(3)?;
    let torus = Presentation::surface(1);
    println!("Hom(π₁T², S3) has {} elements", enumerate_homs(&torus, &s3)?.len());
    let orbits = hom_orbits(&torus, &s3)?;
    for o in &orbits {
        let names: Vec<&str> = o.representative.values().iter().map(|&g| s3.name(g)).collect();
        println!("  orbit of {names:?}: size {}, stabilizer {}", o.orbit_size, o.stabilizer_order);
    }
    println!("groupoid cardinality: {}", groupoid_cardinality(&orbits));

    let grid = builtin_complex(&Builtin::TorusGrid)?;
    let colorings = coloring_orbits(&grid, &s3)?;
    println!("flat colorings on the 18-triangle torus: {} orbits, cardinality {}", colorings.len(), groupoid_cardinality(&colorings));
    Ok(())
}
