//! Actions whose isolated fixed points all have exponents one: every
//! Pontryagin number and the sign sum vanish, and the Euler number is even.

use circloc::actiondata::{sphere_action, CircleActionData, IsolatedFixedPoint, Sign};
use circloc::localize::verify_vanishing;
use circloc::surgery::connected_sum;

fn main() -> circloc::Result<()> {
    let s8 = sphere_action(&[1u32, 1, 1, 1])?;
    let twice = connected_sum(&s8, 0, &s8, 1)?;
    let lonely = CircleActionData::new(2, vec![IsolatedFixedPoint::new([1u32, 1], Sign::Plus)])
        .with_label("lonely point");
    for data in [&s8, &twice, &lonely] {
        let verdict = verify_vanishing(data)?;
        println!("{data}");
        println!("  {}", verdict.to_json());
    }
    Ok(())
}
