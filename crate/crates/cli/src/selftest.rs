//! End-to-end verification over the default field.

use rand::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;

use tft_core::oracle::naive_tft;
use tft_core::{bound_check, itft_in_place, tft_in_place, AuditBuffer, CountingRing, Fp, PrimeField};
use tft_core::{TransformKind, TransformPlan};

type Check = Result<(), String>;
type Family<'a> = (&'static str, &'a mut dyn FnMut(&TransformPlan<Fp>) -> Check);

/// Prints one summary line per check family to stdout. Returns `Err` if any
/// family failed; the first failing length of each family is reported.
pub fn run(max: usize, seed: u64, inject_fault: bool) -> Result<(), ()> {
    let field = PrimeField::default_field();
    let cap = 1usize << field.two_adicity();
    let max = max.min(cap);
    println!("selftest: seed {seed}, l in [1, {max}], modulus {}", field.modulus());
    if inject_fault {
        println!("selftest: fault injection on (negated root)");
    }

    let plans: Vec<TransformPlan<Fp>> = (1..=max).map(|ell| plan(&field, ell, inject_fault)).collect();
    let mut rng = Xoshiro256PlusPlus::seed_from_u64(seed);
    let families: [Family; 4] = [
        ("oracle", &mut |p| oracle(&field, p, &mut rng)),
        ("roundtrip", &mut |p| roundtrip(&field, p, seed)),
        ("audit", &mut |p| audit(&field, p)),
        ("bounds", &mut |p| bounds(&field, p)),
    ];

    let mut ok = true;
    for (name, check) in families {
        match plans.iter().find_map(|p| check(p).err().map(|e| (p.ell(), e))) {
            None => println!("{name}: pass"),
            Some((ell, detail)) => {
                ok = false;
                println!("{name}: FAIL at l = {ell}: {detail}");
            }
        }
    }
    if ok {
        Ok(())
    } else {
        Err(())
    }
}

fn plan(field: &PrimeField, ell: usize, inject_fault: bool) -> TransformPlan<Fp> {
    let good = TransformPlan::new(field, ell).expect("length within capacity");
    if !inject_fault || good.m() < 2 {
        return good;
    }
    // -psi still has order 2^m for m >= 2, so the kernels accept it, but
    // they evaluate at the wrong points
    TransformPlan::with_root(field, ell, field.neg(good.psi()), Some(field.half())).expect("valid root")
}

fn random_vec(field: &PrimeField, rng: &mut Xoshiro256PlusPlus, len: usize) -> Vec<Fp> {
    (0..len)
        .map(|_| field.reduce(rng.random_range(0..field.modulus())))
        .collect()
}

fn oracle(field: &PrimeField, plan: &TransformPlan<Fp>, rng: &mut Xoshiro256PlusPlus) -> Check {
    let ell = plan.ell();
    let a = random_vec(field, rng, ell);
    let mut buf = a.clone();
    tft_in_place(field, plan, &mut buf[..]).map_err(|e| e.to_string())?;
    // the oracle always uses the field's own root
    let psi = field.root_of_order(plan.m()).map_err(|e| e.to_string())?;
    let expected = naive_tft(field, psi, ell, &a).map_err(|e| e.to_string())?;
    match (0..ell).find(|&i| buf[i] != expected[i]) {
        None => Ok(()),
        Some(i) => Err(format!("value {i} is {}, expected {}", buf[i], expected[i])),
    }
}

fn roundtrip(field: &PrimeField, plan: &TransformPlan<Fp>, seed: u64) -> Check {
    let mut rng = Xoshiro256PlusPlus::seed_from_u64(seed ^ plan.ell() as u64);
    let a = random_vec(field, &mut rng, plan.ell());
    let mut buf = a.clone();
    tft_in_place(field, plan, &mut buf[..]).map_err(|e| e.to_string())?;
    itft_in_place(field, plan, &mut buf[..]).map_err(|e| e.to_string())?;
    if buf != a {
        return Err("itft(tft(a)) != a".into());
    }
    itft_in_place(field, plan, &mut buf[..]).map_err(|e| e.to_string())?;
    tft_in_place(field, plan, &mut buf[..]).map_err(|e| e.to_string())?;
    if buf != a {
        return Err("tft(itft(b)) != b".into());
    }
    Ok(())
}

fn audit(field: &PrimeField, plan: &TransformPlan<Fp>) -> Check {
    let values: Vec<Fp> = (0..plan.ell() as u64).map(|i| field.reduce(i + 1)).collect();
    let mut buf = AuditBuffer::new(values, Fp::default());
    tft_in_place(field, plan, &mut buf).map_err(|e| e.to_string())?;
    if buf.out_of_bounds() {
        return Err(format!("forward touched {:?}", buf.touched_range()));
    }
    itft_in_place(field, plan, &mut buf).map_err(|e| e.to_string())?;
    if buf.out_of_bounds() {
        return Err(format!("inverse touched {:?}", buf.touched_range()));
    }
    Ok(())
}

fn bounds(field: &PrimeField, plan: &TransformPlan<Fp>) -> Check {
    let ell = plan.ell();
    let input: Vec<Fp> = (0..ell as u64).map(|i| field.reduce(i + 1)).collect();
    for kind in [TransformKind::Forward, TransformKind::Inverse] {
        let ring = CountingRing::new(*field);
        let mut buf = input.clone();
        match kind {
            TransformKind::Inverse => itft_in_place(&ring, plan, &mut buf[..]),
            _ => tft_in_place(&ring, plan, &mut buf[..]),
        }
        .map_err(|e| e.to_string())?;
        let report = bound_check(ell, ring.counters(), kind);
        if !report.pass() {
            return Err(format!("{kind}: {}", report.csv_row()));
        }
    }
    Ok(())
}
