//! Cocycles on finite groups and their classes.

use dwtqft::groups::{check_cocycle, coboundary, enumerate_classes_small, ClassMode, Cochain, FiniteGroup, GroupSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let v4 = FiniteGroup::build(&GroupSpec::Product(vec![GroupSpec::Cyclic(2), GroupSpec::Cyclic(2)]))?;
    for degree in 1..=3 {
        let classes = enumerate_classes_small(&v4, degree, 2, ClassMode::Auto)?;
        println!("Z/2×Z/2, degree {degree}, Z/2 values: {} classes in U(1)", classes.len());
    }

    let s3 = FiniteGroup::symmetric(3)?;
    let eta = Cochain::from_fn(&s3, 1, 6, |g| g[0] as i64);
    let d = coboundary(&s3, &eta);
    println!("δη is a cocycle on S3: {}", check_cocycle(&s3, &d)?);
    println!("conjugacy classes of S3: {:?}", s3.conjugacy_classes());
    Ok(())
}
