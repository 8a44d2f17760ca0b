use qfoulkes::configsearch::*;
use rayon::prelude::*;

fn main() {
    for n in [6u32, 8, 10, 12, 14, 15, 16] {
        let cands = candidates(n);
        let pleths: Vec<_> = cands.par_iter().map(|(a, b)| schur_plethysm(a, b)).collect();
        let mut strict = 0u64;
        let mut ties = 0u64;
        let mut tie_ecat = 0u64;
        for i in 0..cands.len() {
            for j in 0..cands.len() {
                if i == j { continue; }
                let diff = pleths[j].sub(&pleths[i]);
                if diff.is_zero() {
                    ties += 1;
                    let (a, b) = &cands[i];
                    let (g, d) = &cands[j];
                    if e_condition(a, b, g, d).unwrap() { tie_ecat += 1; }
                } else if diff.is_schur_positive() {
                    strict += 1;
                }
            }
        }
        println!("n={n}: strict={strict} ties={ties} (ties passing e-cond: {tie_ecat}) nonstrict={}", strict + ties);
    }
}
