use std::collections::BTreeMap;

use super::skeleton::{Color, Skeleton};
use crate::error::{Error, Result};

/// Black vertex valencies `(b1, b2, b3)` and pendant white count `w1`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
struct Shape {
    b1: usize,
    b2: usize,
    b3: usize,
    w1: usize,
}

fn shapes(k: usize, max_unstable: usize) -> Vec<Shape> {
    let total = 2 * k;
    let mut out = Vec::new();
    for b2 in 0..=total / 2 {
        for b1 in 0..=total - 2 * b2 {
            for w1 in 0..=total - 2 * b2 - b1 {
                let b3 = total - 2 * b2 - b1 - w1;
                if b1 + b2 + w1 <= max_unstable {
                    out.push(Shape { b1, b2, b3, w1 });
                }
            }
        }
    }
    out
}

/// Builds the map in which black half-edge `h` is matched to `partner[h]`
/// through a bivalent white vertex, or to a pendant white when `None`.
fn build(valencies: &[usize], partner: &[Option<usize>]) -> Result<Skeleton> {
    let h = partner.len();
    let mut sigma = Vec::new();
    let mut color = Vec::new();
    let mut start = 0;
    for &v in valencies {
        for s in 0..v {
            sigma.push(start + (s + 1) % v);
            color.push(Color::Black);
        }
        start += v;
    }
    let mut alpha = vec![usize::MAX; h];
    for d in 0..h {
        match partner[d] {
            Some(e) if d < e => {
                let (wa, wb) = (sigma.len(), sigma.len() + 1);
                sigma.extend([wb, wa]);
                color.extend([Color::White, Color::White]);
                alpha.extend([d, e]);
                alpha[d] = wa;
                alpha[e] = wb;
            }
            Some(_) => {}
            None => {
                let w = sigma.len();
                sigma.push(w);
                color.push(Color::White);
                alpha.push(d);
                alpha[d] = w;
            }
        }
    }
    Skeleton::new(sigma, alpha, color)
}

fn matchings(free: &mut Vec<usize>, partner: &mut Vec<Option<usize>>, emit: &mut dyn FnMut(&[Option<usize>])) {
    let Some(&first) = free.first() else {
        emit(partner);
        return;
    };
    for i in 1..free.len() {
        let other = free[i];
        partner[first] = Some(other);
        partner[other] = Some(first);
        let rest: Vec<usize> = free.iter().copied().filter(|&x| x != first && x != other).collect();
        let saved = std::mem::replace(free, rest);
        matchings(free, partner, emit);
        *free = saved;
        partner[first] = None;
        partner[other] = None;
    }
}

fn subsets(n: usize, k: usize, start: usize, acc: &mut Vec<usize>, emit: &mut dyn FnMut(&[usize])) {
    if acc.len() == k {
        emit(acc);
        return;
    }
    for i in start..n {
        acc.push(i);
        subsets(n, k, i + 1, acc, emit);
        acc.pop();
    }
}

/// Connected planar skeletons of trigonal curves in `Σ_k` with at most
/// `max_unstable` unstable vertices, up to orientation-preserving
/// isomorphism, sorted by canonical code.
pub fn enumerate_skeletons(k: usize, max_unstable: usize) -> Result<Vec<Skeleton>> {
    if !(1..=2).contains(&k) {
        return Err(Error::InvalidConfiguration(format!("skeletons are enumerated for k = 1, 2 only, got {k}")));
    }
    let mut found: BTreeMap<Vec<usize>, Skeleton> = BTreeMap::new();
    for shape in shapes(k, max_unstable) {
        let mut valencies = vec![3; shape.b3];
        valencies.extend(std::iter::repeat_n(2, shape.b2));
        valencies.extend(std::iter::repeat_n(1, shape.b1));
        let h: usize = valencies.iter().sum();
        if h < shape.w1 || (h - shape.w1) % 2 == 1 {
            continue;
        }
        subsets(h, shape.w1, 0, &mut Vec::new(), &mut |pendant| {
            let mut free: Vec<usize> = (0..h).filter(|x| !pendant.contains(x)).collect();
            let mut partner = vec![None; h];
            matchings(&mut free, &mut partner, &mut |partner| {
                if let Ok(s) = build(&valencies, partner) {
                    found.entry(s.canonical_code()).or_insert(s);
                }
            });
        });
    }
    Ok(found.into_values().collect())
}
