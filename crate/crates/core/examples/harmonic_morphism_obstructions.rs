//! Which manifolds can be the domain of a non-constant harmonic morphism
//! with one-dimensional fibres, judged by characteristic numbers alone.

use circloc::obstruct::{catalog, check_domain, combine_connected_sum};

fn main() -> circloc::Result<()> {
    let names = [
        "K3", "CP^2", "CP^3", "CP^4", "S^4xP_2", "S^2xP_1", "T^4", "T^5", "S^4", "CP2#-CP2",
    ];
    for name in names {
        let inv = catalog(name)?;
        let verdict = check_domain(&inv)?;
        println!("{name:<9} {}", verdict.to_json());
    }
    let k3 = catalog("K3")?;
    let reversed = combine_connected_sum(&k3, &k3.reversed())?;
    println!("K3#-K3    {}", check_domain(&reversed)?.to_json());
    Ok(())
}
