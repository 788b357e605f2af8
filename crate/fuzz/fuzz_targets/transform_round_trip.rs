#![no_main]

use libfuzzer_sys::fuzz_target;
use tft_core::{itft_in_place, tft_in_place, PrimeField, TransformPlan};

// Each 4-byte chunk is one little-endian residue, reduced mod 12289.
fuzz_target!(|data: &[u8]| {
    let field = PrimeField::new(12289).unwrap();
    let input: Vec<_> = data
        .chunks_exact(4)
        .take(4096)
        .map(|c| field.reduce(u32::from_le_bytes(c.try_into().unwrap()) as u64))
        .collect();
    let Ok(plan) = TransformPlan::new(&field, input.len()) else {
        return;
    };
    let mut buf = input.clone();
    tft_in_place(&field, &plan, &mut buf[..]).unwrap();
    itft_in_place(&field, &plan, &mut buf[..]).unwrap();
    assert_eq!(buf, input);
});
