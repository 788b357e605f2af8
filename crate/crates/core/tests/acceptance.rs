//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;

use tft_core::instrumentation::{
    binary_decomposition_cost, fft_add_count, fft_mul_bound, forward_add_bound, forward_mul_bound, inverse_add_bound,
    inverse_mul_bound, inverse_pow2_bound,
};
use tft_core::oracle::{naive_polymul, naive_tft};
use tft_core::polymul::smoothness_report;
use tft_core::{
    fft_in_place, itft_in_place, tft_in_place, tft_polymul, AuditBuffer, CountingRing, Fp, OpCounters, PairStream,
    PrimeField, TransformPlan,
};

const SEED: u64 = 0x5eed_7f70;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn(&PrimeField) -> Outcome);

fn random_vec(rng: &mut Xoshiro256PlusPlus, field: &PrimeField, len: usize) -> Vec<Fp> {
    (0..len)
        .map(|_| field.reduce(rng.random_range(0..field.modulus())))
        .collect()
}

fn forward_counts(field: &PrimeField, plan: &TransformPlan<Fp>, input: &[Fp]) -> OpCounters {
    let ring = CountingRing::new(*field);
    let mut buf = input.to_vec();
    tft_in_place(&ring, plan, &mut buf[..]).unwrap();
    ring.counters()
}

fn inverse_counts(field: &PrimeField, plan: &TransformPlan<Fp>, input: &[Fp]) -> OpCounters {
    let ring = CountingRing::new(*field);
    let mut buf = input.to_vec();
    itft_in_place(&ring, plan, &mut buf[..]).unwrap();
    ring.counters()
}

fn oracle_equivalence(field: &PrimeField) -> Outcome {
    let mut rng = Xoshiro256PlusPlus::seed_from_u64(SEED);
    for ell in 1..=512 {
        let plan = TransformPlan::new(field, ell).map_err(|e| e.to_string())?;
        for trial in 0..10 {
            let a = random_vec(&mut rng, field, ell);
            let mut buf = a.clone();
            tft_in_place(field, &plan, &mut buf[..]).map_err(|e| e.to_string())?;
            let expected = naive_tft(field, plan.psi(), ell, &a).map_err(|e| e.to_string())?;
            if buf != expected {
                return Err(format!("mismatch at l = {ell}, vector {trial}"));
            }
        }
    }
    Ok("l in [1, 512], 10 vectors each, exact".into())
}

fn round_trip(field: &PrimeField) -> Outcome {
    let mut rng = Xoshiro256PlusPlus::seed_from_u64(SEED + 1);
    for ell in 1..=512 {
        let plan = TransformPlan::new(field, ell).map_err(|e| e.to_string())?;
        for trial in 0..10 {
            let a = random_vec(&mut rng, field, ell);
            let mut buf = a.clone();
            tft_in_place(field, &plan, &mut buf[..]).map_err(|e| e.to_string())?;
            itft_in_place(field, &plan, &mut buf[..]).map_err(|e| e.to_string())?;
            if buf != a {
                return Err(format!("itft(tft(a)) != a at l = {ell}, vector {trial}"));
            }
            itft_in_place(field, &plan, &mut buf[..]).map_err(|e| e.to_string())?;
            tft_in_place(field, &plan, &mut buf[..]).map_err(|e| e.to_string())?;
            if buf != a {
                return Err(format!("tft(itft(b)) != b at l = {ell}, vector {trial}"));
            }
        }
    }
    Ok("both directions, l in [1, 512], 10 vectors each".into())
}

fn addition_bounds(field: &PrimeField) -> Outcome {
    let mut worst_fwd = (0u64, 1u64, 0usize);
    let mut worst_inv = (0u64, 1u64, 0usize);
    for ell in 1..=4096 {
        let plan = TransformPlan::new(field, ell).map_err(|e| e.to_string())?;
        let input: Vec<Fp> = (0..ell as u64).map(|i| field.reduce(i + 1)).collect();
        let fwd = forward_counts(field, &plan, &input).add_sub;
        let inv = inverse_counts(field, &plan, &input).add_sub;
        let (fb, ib) = (forward_add_bound(ell), inverse_add_bound(ell));
        if fwd > fb {
            return Err(format!("forward add/sub {fwd} > {fb} at l = {ell}"));
        }
        if inv > ib {
            return Err(format!("inverse add/sub {inv} > {ib} at l = {ell}"));
        }
        if fwd * worst_fwd.1 > worst_fwd.0 * fb {
            worst_fwd = (fwd, fb, ell);
        }
        if inv * worst_inv.1 > worst_inv.0 * ib {
            worst_inv = (inv, ib, ell);
        }
    }
    Ok(format!(
        "l in [1, 4096]; tightest forward {}/{} at l = {}, tightest inverse {}/{} at l = {}",
        worst_fwd.0, worst_fwd.1, worst_fwd.2, worst_inv.0, worst_inv.1, worst_inv.2
    ))
}

fn multiplication_bounds(field: &PrimeField) -> Outcome {
    // largest measured excess over the bound's main term, with the slack
    // available at that length
    let mut fwd_excess = (i64::MIN, 0u64, 0usize);
    let mut inv_excess = (i64::MIN, 0u64, 0usize);
    let mut pow2_worst = (0u64, 1u64, 0usize);
    // informational only: both inverse classes against (l/2) floor(log2 l) + 4l
    let mut merged_excess = (i64::MIN, 0usize);
    for ell in 1..=4096 {
        let plan = TransformPlan::new(field, ell).map_err(|e| e.to_string())?;
        let input: Vec<Fp> = (0..ell as u64).map(|i| field.reduce(3 * i + 2)).collect();
        let fwd = forward_counts(field, &plan, &input);
        let inv = inverse_counts(field, &plan, &input);
        let l = ell as u64;
        let log = ell.ilog2() as u64;

        let fwd_main = binary_decomposition_cost(ell) + 2 * l;
        let fb = forward_mul_bound(ell);
        if fwd.mul_root > fb {
            return Err(format!("forward mul_root {} > {fb} at l = {ell}", fwd.mul_root));
        }
        let e = fwd.mul_root as i64 - fwd_main as i64;
        if e > fwd_excess.0 {
            fwd_excess = (e, fb - fwd_main, ell);
        }

        let inv_main = l * log / 2 + 2 * l;
        let ib = inverse_mul_bound(ell);
        if inv.mul_root > ib {
            return Err(format!("inverse mul_root {} > {ib} at l = {ell}", inv.mul_root));
        }
        let e = inv.mul_root as i64 - inv_main as i64;
        if e > inv_excess.0 {
            inv_excess = (e, ib - inv_main, ell);
        }

        let pb = inverse_pow2_bound(ell);
        if inv.mul_pow2 > pb {
            return Err(format!("inverse mul_pow2 {} > {pb} at l = {ell}", inv.mul_pow2));
        }
        if inv.mul_pow2 * pow2_worst.1 >= pow2_worst.0 * pb {
            pow2_worst = (inv.mul_pow2, pb, ell);
        }
        let merged = (inv.mul_root + inv.mul_pow2) as i64 - (l * log / 2 + 4 * l) as i64;
        if merged > merged_excess.0 {
            merged_excess = (merged, ell);
        }
        if fwd.mul_other + inv.mul_other + fwd.mul_pow2 != 0 {
            return Err(format!("unexpected multiplication class at l = {ell}"));
        }
    }
    Ok(format!(
        "l in [1, 4096], slack 8(m+1)^2; max excess over main term: forward {} (slack {}) at l = {}, \
         inverse {} (slack {}) at l = {}; tightest mul_pow2 {}/{} at l = {}; \
         merged inverse excess over (l/2)floor(log2 l) + 4l: {} at l = {}",
        fwd_excess.0,
        fwd_excess.1,
        fwd_excess.2,
        inv_excess.0,
        inv_excess.1,
        inv_excess.2,
        pow2_worst.0,
        pow2_worst.1,
        pow2_worst.2,
        merged_excess.0,
        merged_excess.1
    ))
}

fn fft_baseline(field: &PrimeField) -> Outcome {
    let mut max_mul = (0u64, 0u64, 0usize);
    for k in 0..=14u32 {
        let n = 1usize << k;
        let omega = field.root_of_order(k).map_err(|e| e.to_string())?;
        let ring = CountingRing::new(*field);
        let mut buf: Vec<Fp> = (0..n as u64).map(|i| field.reduce(i + 5)).collect();
        fft_in_place(&ring, k, omega, &mut buf).map_err(|e| e.to_string())?;
        let c = ring.counters();
        if c.add_sub != fft_add_count(n) {
            return Err(format!("add/sub {} != {} at n = {n}", c.add_sub, fft_add_count(n)));
        }
        if c.mul_root > fft_mul_bound(n) {
            return Err(format!("mul_root {} > {} at n = {n}", c.mul_root, fft_mul_bound(n)));
        }
        max_mul = (c.mul_root, fft_mul_bound(n), n);
    }
    Ok(format!(
        "n = 2^k, k in [0, 14]; at n = {}: mul_root {}/{}",
        max_mul.2, max_mul.0, max_mul.1
    ))
}

fn in_place_audit(field: &PrimeField) -> Outcome {
    for ell in 1..=512 {
        let plan = TransformPlan::new(field, ell).map_err(|e| e.to_string())?;
        let values: Vec<Fp> = (0..ell as u64).map(|i| field.reduce(7 * i + 1)).collect();
        for (name, inverse) in [("forward", false), ("inverse", true)] {
            let mut buf = AuditBuffer::new(values.clone(), Fp::default());
            let run = if inverse {
                itft_in_place(field, &plan, &mut buf)
            } else {
                tft_in_place(field, &plan, &mut buf)
            };
            run.map_err(|e| e.to_string())?;
            let inside = buf.touched_range().is_none_or(|(lo, hi)| lo < ell && hi < ell);
            if buf.out_of_bounds() || !inside {
                return Err(format!("{name} transform left [0, {ell}): {:?}", buf.touched_range()));
            }
        }
    }
    Ok("both transforms, l in [1, 512], every access in [0, l)".into())
}

fn reverse(i: usize, bits: u32) -> usize {
    (0..bits).fold(0, |acc, b| (acc << 1) | ((i >> b) & 1))
}

fn pair_generator(field: &PrimeField) -> Outcome {
    let p = field.two_adicity();
    let omega = field.root_of_order(p).map_err(|e| e.to_string())?;
    let mut checked = 0usize;
    for m in 1..=10u32 {
        let psi = field.pow(omega, 1 << (p - m));
        for q in 1..=1usize << (m - 1) {
            let ring = CountingRing::new(*field);
            let mut pairs: Vec<(usize, Fp)> = PairStream::new(&ring, m, psi, q).map_err(|e| e.to_string())?.collect();
            let c = ring.counters();
            let mults = c.mul_root + c.mul_pow2 + c.mul_other;
            if mults > (q + 4 * m as usize) as u64 {
                return Err(format!("{mults} multiplications > q + 4m at m = {m}, q = {q}"));
            }
            pairs.sort_by_key(|&(i, _)| i);
            let expected: Vec<(usize, Fp)> = (1..q)
                .map(|i| (i, field.pow(omega, reverse(2 * i, p) as u64)))
                .collect();
            if pairs != expected {
                return Err(format!("pair set differs at m = {m}, q = {q}"));
            }
            checked += 1;
        }
    }
    Ok(format!(
        "m in [1, 10], all q: {checked} streams match brute force within q + 4m multiplications"
    ))
}

fn polynomial_multiplication(field: &PrimeField) -> Outcome {
    let mut rng = Xoshiro256PlusPlus::seed_from_u64(SEED + 8);
    for trial in 0..200 {
        let lf = rng.random_range(1..=999usize);
        let lg = rng.random_range(1..=1000 - lf);
        let f = random_vec(&mut rng, field, lf);
        let g = random_vec(&mut rng, field, lg);
        let fast = tft_polymul(field, &f, &g).map_err(|e| e.to_string())?;
        if fast != naive_polymul(field, &f, &g).map_err(|e| e.to_string())? {
            return Err(format!("product differs for sizes ({lf}, {lg}), pair {trial}"));
        }
    }
    let report = smoothness_report(field, 64..=256).map_err(|e| e.to_string())?;
    let jump = report.max_tft_jump();
    if jump > 2.2 {
        return Err(format!("smoothness: max jump {jump:.3} > 2.2"));
    }
    Ok(format!(
        "200 size pairs exact; l in [64, 256] max jump {jump:.3} (padded FFT {:.3})",
        report.max_fft_jump()
    ))
}

fn determinism(field: &PrimeField) -> Outcome {
    let mut rng = Xoshiro256PlusPlus::seed_from_u64(SEED + 9);
    for ell in 1..=512 {
        let plan = TransformPlan::new(field, ell).map_err(|e| e.to_string())?;
        let a = random_vec(&mut rng, field, ell);
        let b: Vec<Fp> = random_vec(&mut rng, field, ell);
        if forward_counts(field, &plan, &a) != forward_counts(field, &plan, &b) {
            return Err(format!("forward counters depend on input at l = {ell}"));
        }
        if inverse_counts(field, &plan, &a) != inverse_counts(field, &plan, &b) {
            return Err(format!("inverse counters depend on input at l = {ell}"));
        }
    }
    Ok("l in [1, 512], forward and inverse, two random inputs each".into())
}

fn main() -> ExitCode {
    let field = PrimeField::default_field();
    println!("acceptance: modulus {}, seed {SEED:#x}", field.modulus());
    let criteria: [Criterion; 9] = [
        ("C1 oracle equivalence", oracle_equivalence),
        ("C2 round trip", round_trip),
        ("C3 addition bounds", addition_bounds),
        ("C4 multiplication bounds", multiplication_bounds),
        ("C5 fft baseline", fft_baseline),
        ("C6 in-place audit", in_place_audit),
        ("C7 pair generator", pair_generator),
        ("C8 polynomial multiplication", polynomial_multiplication),
        ("C9 determinism", determinism),
    ];
    let mut failures = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        let outcome = check(&field);
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {name}: {detail} [{secs:.2}s]"),
            Err(detail) => {
                failures += 1;
                println!("FAIL {name}: {detail} [{secs:.2}s]");
            }
        }
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failures} criteria failed");
        ExitCode::FAILURE
    }
}
