//! Skein-recursion HOMFLY evaluator on closed braid diagrams, independent
//! of the R-matrix engine.
//!
//! Walk the components in a fixed order; the first crossing met as an
//! under-crossing is switched with the skein relation
//! `a P(L+) - a^-1 P(L-) = z P(L0)`. A diagram with no such crossing is an
//! unlink, worth `δ^(c-1)` with `δ = (a - a^-1)/z`.

use std::collections::HashMap;

use degenq::RatFn;

pub struct Homfly {
    a: RatFn,
    ainv: RatFn,
    z: RatFn,
    delta: RatFn,
    memo: HashMap<(usize, Vec<i32>), RatFn>,
}

impl Homfly {
    pub fn new(a: RatFn, z: RatFn) -> Self {
        let ainv = a.inv().unwrap();
        let delta = (&a - &ainv).checked_div(&z).unwrap();
        Self { a, ainv, z, delta, memo: HashMap::new() }
    }

    /// HOMFLY specialised at `a = q^d`, `z = q - q^-1`.
    pub fn at_difference(d: i32) -> Self {
        Self::new(RatFn::q_pow(d), RatFn::q() - RatFn::q_pow(-1))
    }

    pub fn eval(&mut self, strands: usize, word: &[i32]) -> RatFn {
        let key = (strands, word.to_vec());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let v = match first_undercrossing(strands, word) {
            None => self.delta.pow(components(strands, word) as i32 - 1).unwrap(),
            Some(t) => {
                let mut flipped = word.to_vec();
                flipped[t] = -word[t];
                let mut smoothed = word.to_vec();
                smoothed.remove(t);
                let pf = self.eval(strands, &flipped);
                let p0 = self.eval(strands, &smoothed);
                if word[t] > 0 {
                    // P+ = a^-2 P- + a^-1 z P0
                    &(&self.ainv * &self.ainv) * &pf + &(&self.ainv * &self.z) * &p0
                } else {
                    // P- = a^2 P+ - a z P0
                    &(&self.a * &self.a) * &pf - &(&self.a * &self.z) * &p0
                }
            }
        };
        self.memo.insert(key, v.clone());
        v
    }
}

fn step(pos: usize, letter: i32) -> (usize, Option<bool>) {
    let i = letter.unsigned_abs() as usize;
    // Letter ±i crosses positions i-1 and i. For a positive letter the
    // strand moving right passes over; for a negative one, the strand
    // moving left.
    if pos == i - 1 {
        (i, Some(letter > 0))
    } else if pos == i {
        (i - 1, Some(letter < 0))
    } else {
        (pos, None)
    }
}

fn permutation(strands: usize, word: &[i32]) -> Vec<usize> {
    (0..strands).map(|p| word.iter().fold(p, |x, &l| step(x, l).0)).collect()
}

fn components(strands: usize, word: &[i32]) -> usize {
    let perm = permutation(strands, word);
    let mut seen = vec![false; strands];
    let mut c = 0;
    for s in 0..strands {
        if !seen[s] {
            c += 1;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = perm[x];
            }
        }
    }
    c
}

fn first_undercrossing(strands: usize, word: &[i32]) -> Option<usize> {
    let perm = permutation(strands, word);
    let mut visited = vec![false; word.len()];
    let mut started = vec![false; strands];
    for s in 0..strands {
        if started[s] {
            continue;
        }
        let mut top = s;
        loop {
            started[top] = true;
            let mut x = top;
            for (t, &l) in word.iter().enumerate() {
                let (nx, over) = step(x, l);
                if let Some(over) = over {
                    if !visited[t] {
                        if !over {
                            return Some(t);
                        }
                        visited[t] = true;
                    }
                }
                x = nx;
            }
            top = perm[top];
            if top == s {
                break;
            }
        }
    }
    None
}
