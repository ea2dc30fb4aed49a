//! Deterministic integer factorization for the weighted scaling code.
//!
//! Trial division, BPSW primality and Brent–Pollard rho with fixed start
//! values. Cofactors that survive the rho budget are kept as composite atoms;
//! the atom set is refined to be pairwise coprime so valuations stay
//! consistent across the numbers being compared.

use num_bigint::BigUint;
use num_integer::Integer;
use num_prime::nt_funcs::is_prime;
use num_prime::PrimalityTestConfig;
use num_traits::{One, ToPrimitive, Zero};

const TRIAL_LIMIT: u32 = 1 << 14;
/// Rho steps per seed for operands up to `RHO_LARGE_BITS` bits; larger
/// operands get `RHO_ITERATIONS_LARGE` and only the first two seeds, since
/// each step costs a multi-thousand-bit modular multiply.
const RHO_ITERATIONS: usize = 1 << 16;
const RHO_ITERATIONS_LARGE: usize = 1 << 12;
const RHO_LARGE_BITS: u64 = 256;
const RHO_SEEDS: [(u64, u64); 4] = [(2, 1), (3, 5), (5, 7), (7, 11)];

fn small_primes() -> impl Iterator<Item = u32> {
    (2..TRIAL_LIMIT).filter(|&n| (2..).take_while(|d| d * d <= n).all(|d| n % d != 0))
}

fn probably_prime(n: &BigUint) -> bool {
    is_prime(n, Some(PrimalityTestConfig::bpsw())).probably()
}

/// `(r, k)` with `r^k = n` and `k` as large as possible. Only called on
/// numbers without prime factors below the trial limit, so `r >= TRIAL_LIMIT`.
fn perfect_power(n: &BigUint) -> (BigUint, u32) {
    let max_k = (n.bits() / TRIAL_LIMIT.ilog2() as u64) as u32;
    for k in (2..=max_k).filter(|&k| (2..k).take_while(|d| d * d <= k).all(|d| k % d != 0)) {
        let r = n.nth_root(k);
        if num_traits::pow(r.clone(), k as usize) == *n {
            let (base, inner) = perfect_power(&r);
            return (base, k * inner);
        }
    }
    (n.clone(), 1)
}

fn rho(n: &BigUint) -> Option<BigUint> {
    let (seeds, iterations) = if n.bits() <= RHO_LARGE_BITS {
        (&RHO_SEEDS[..], RHO_ITERATIONS)
    } else {
        (&RHO_SEEDS[..2], RHO_ITERATIONS_LARGE)
    };
    seeds.iter().find_map(|&(start, offset)| {
        let (f, _) = num_prime::factor::pollard_rho(n, BigUint::from(start) % n, BigUint::from(offset) % n, iterations);
        f.filter(|f| !f.is_one() && f != n)
    })
}

/// Splits `n` into atoms (primes, plus composites rho could not split).
fn atoms(n: BigUint, out: &mut Vec<BigUint>) {
    if n.is_one() {
        return;
    }
    if n.to_u64().is_some_and(|v| v < (TRIAL_LIMIT as u64) * (TRIAL_LIMIT as u64)) || probably_prime(&n) {
        out.push(n);
        return;
    }
    let (base, k) = perfect_power(&n);
    if k > 1 {
        atoms(base, out);
        return;
    }
    match rho(&n) {
        Some(f) => {
            let g = &n / &f;
            atoms(f, out);
            atoms(g, out);
        }
        None => out.push(n),
    }
}

/// Makes the atom set pairwise coprime without losing any prime.
fn refine(mut set: Vec<BigUint>) -> Vec<BigUint> {
    set.retain(|v| !v.is_one());
    set.sort();
    set.dedup();
    loop {
        let mut split = None;
        'outer: for i in 0..set.len() {
            for j in i + 1..set.len() {
                let g = set[i].gcd(&set[j]);
                if !g.is_one() {
                    split = Some((i, j, g));
                    break 'outer;
                }
            }
        }
        let Some((i, j, g)) = split else { break };
        let a = &set[i] / &g;
        let b = &set[j] / &g;
        set.remove(j);
        set.remove(i);
        set.extend([a, b, g].into_iter().filter(|v| !v.is_one()));
        set.sort();
        set.dedup();
    }
    set
}

/// Pairwise-coprime atoms covering every prime factor of every input.
///
/// Small primes are stripped first; the remaining cofactors are split into a
/// gcd-based coprime base so related inputs are only factored once.
pub(crate) fn coprime_atoms<'a>(values: impl IntoIterator<Item = &'a BigUint>) -> Vec<BigUint> {
    let mut raw = Vec::new();
    let mut rests = Vec::new();
    for v in values {
        if v.is_zero() {
            continue;
        }
        let mut rest = v.clone();
        for p in small_primes() {
            let p = BigUint::from(p);
            if (&p * &p) > rest {
                break;
            }
            if rest.is_multiple_of(&p) {
                while rest.is_multiple_of(&p) {
                    rest /= &p;
                }
                raw.push(p);
            }
        }
        rests.push(rest);
    }
    for base in refine(rests) {
        atoms(base, &mut raw);
    }
    refine(raw)
}

/// Multiplicity of `atom` in `n` (`n` nonzero, `atom > 1`).
pub(crate) fn valuation(n: &BigUint, atom: &BigUint) -> u32 {
    debug_assert!(!n.is_zero() && *atom > BigUint::one());
    let mut n = n.clone();
    let mut k = 0;
    loop {
        let (q, r) = n.div_rem(atom);
        if !r.is_zero() {
            return k;
        }
        n = q;
        k += 1;
    }
}
