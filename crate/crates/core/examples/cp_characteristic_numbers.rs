//! Euler number, Pontryagin numbers and signature of CP^n from the fixed
//! points of the linear action with weights 0, 1, ..., n.

use circloc::actiondata::cp_action;
use circloc::localize::invariants;

fn main() -> circloc::Result<()> {
    let max: i64 = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(6);
    for n in 1..=max {
        let weights: Vec<i64> = (0..=n).collect();
        let report = invariants(&cp_action(&weights)?)?;
        let inv = &report.invariants;
        let numbers: Vec<String> = inv
            .pontryagin_numbers()
            .iter()
            .filter_map(|(k, v)| v.as_ref().map(|v| format!("{}={v}", k.monomial_name())))
            .collect();
        println!(
            "CP^{n}: euler {} signature {} {}",
            inv.euler().unwrap(),
            inv.signature().map_or("?".into(), |s| s.to_string()),
            numbers.join(" ")
        );
    }
    println!("({})", circloc::CONVENTION);
    Ok(())
}
