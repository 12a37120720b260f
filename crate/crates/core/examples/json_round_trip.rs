//! Canonical JSON for fixed-point data and invariants.

use circloc::actiondata::{cp_action, parse, parse_invariants, serialize, serialize_invariants};
use circloc::localize::invariants;

fn main() -> circloc::Result<()> {
    let data = cp_action(&[0, 1, 2])?;
    let text = serialize(&data);
    print!("{text}");
    assert_eq!(serialize(&parse(text.as_bytes())?), text);

    let inv = invariants(&data)?.invariants;
    let text = serialize_invariants(&inv);
    print!("{text}");
    assert_eq!(parse_invariants(text.as_bytes())?, inv);

    match parse(br#"{"half_dimension": 2, "isolated": [{"exponents": [1, 1], "sign": 2}]}"#) {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
