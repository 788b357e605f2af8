#![no_main]

use libfuzzer_sys::fuzz_target;
use tft_core::text::{format_column, parse_residues};
use tft_core::PrimeField;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    for modulus in [17, PrimeField::DEFAULT_MODULUS] {
        let field = PrimeField::new(modulus).unwrap();
        if let Ok(values) = parse_residues(text, &field) {
            assert!(values.iter().all(|v| v.value() < modulus));
            assert_eq!(parse_residues(&format_column(&values), &field).unwrap(), values);
        }
    }
});
