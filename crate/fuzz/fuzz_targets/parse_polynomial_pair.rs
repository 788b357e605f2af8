#![no_main]

use libfuzzer_sys::fuzz_target;
use tft_core::text::parse_polynomial_pair;
use tft_core::{tft_polymul, PrimeField};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let field = PrimeField::new(12289).unwrap();
    if let Ok((f, g)) = parse_polynomial_pair(text, &field) {
        assert!(!f.is_empty() && !g.is_empty());
        // too-long products are an error, never a panic
        if let Ok(product) = tft_polymul(&field, &f, &g) {
            assert_eq!(product.len(), f.len() + g.len() - 1);
        }
    }
});
