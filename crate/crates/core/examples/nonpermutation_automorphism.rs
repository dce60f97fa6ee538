//! An automorphism of A6 that no relabelling of points induces, and the
//! parallel sum it twists.

use symbreak::catalog::{build_named, catalog};
use symbreak::sums::{decompose, find_conjugator, IsoSpec};

fn main() -> symbreak::Result<()> {
    let twisted = build_named("A6||psiA6")?;
    let d = decompose(&twisted, &(0..6).collect::<Vec<_>>(), &(6..12).collect::<Vec<_>>())?;
    let iso = IsoSpec::new(d.constituents.0.clone(), d.constituents.1.clone(), d.iso_pairs.clone())?;
    println!("valid isomorphism: {}", iso.validate());
    match find_conjugator(&iso) {
        Some(c) => println!("induced by {c}"),
        None => println!("no permutation of points induces it"),
    }

    let entry = catalog().lookup("A6||psiA6").expect("catalogued");
    for r in &entry.repairs {
        println!("repair of {}: {} -> {} ({})", r.field, r.printed, r.repaired, r.note);
    }
    Ok(())
}
