//! Localization sums of monomials of low degree vanish identically.

use circloc::actiondata::cp_action;
use circloc::localize::{admissible_monomials, vanishing_sum};

fn main() -> circloc::Result<()> {
    for weights in [
        vec![0i64, 3],
        vec![0, 1, 5],
        vec![0, 2, 3, 6],
        vec![0, 1, 2, 4, 6],
    ] {
        let data = cp_action(&weights)?;
        let n = data.half_dimension;
        for key in admissible_monomials(n) {
            println!(
                "{weights:?} f={:<6} sum={}",
                key.monomial_name(),
                vanishing_sum(&data, &key)?
            );
        }
    }
    Ok(())
}
