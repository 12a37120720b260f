//! Blow up the four-sphere repeatedly and watch signature, Euler number and
//! p_1 move as predicted; the equal-exponent identity holds at every step.

use circloc::actiondata::sphere_action;
use circloc::localize::verify_equal_exponent_signature;
use circloc::surgery::{blow_up, bookkeeping, SurgeryOp};

fn main() -> circloc::Result<()> {
    let mut data = sphere_action(&[1u32, 1])?;
    while !data.isolated.is_empty() {
        let op = SurgeryOp::blow_up_of(&data, 0)?;
        let next = blow_up(&data, 0)?;
        print!("{}", bookkeeping(&data, &next, &op));
        data = next;
        let verdict = verify_equal_exponent_signature(&data)?;
        println!("  identity holds: {}", verdict.passed());
    }
    println!("{data}");

    // distinct exponents: the point is traded for weighted projective points
    let s4 = sphere_action(&[1u32, 2])?;
    let op = SurgeryOp::blow_up_of(&s4, 0)?;
    let blown = blow_up(&s4, 0)?;
    print!("{}", bookkeeping(&s4, &blown, &op));
    println!("{blown}");
    Ok(())
}
