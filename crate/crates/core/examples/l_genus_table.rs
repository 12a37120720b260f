//! The L-polynomials L_1 ... L_5 in the Pontryagin classes.

use circloc::exactalg::{l_genus, multiplicative_series_coefficients, MAX_L_DEGREE};

fn main() -> circloc::Result<()> {
    let series = multiplicative_series_coefficients(MAX_L_DEGREE as usize);
    let head: Vec<String> = series.iter().map(ToString::to_string).collect();
    println!("sqrt(z)/tanh(sqrt(z)) = {} + ...", head.join(", "));
    for k in 1..=MAX_L_DEGREE {
        println!("L{k} = {}", l_genus(k)?);
    }
    Ok(())
}
