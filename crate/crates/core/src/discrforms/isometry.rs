use super::form::{DiscrElement, DiscrSubgroup, FiniteQuadraticForm};

/// Decides whether two finite quadratic forms are isometric by searching for
/// generator images. Intended for small groups.
pub fn forms_isometric(a: &FiniteQuadraticForm, b: &FiniteQuadraticForm) -> bool {
    if a.order() != b.order() {
        return false;
    }
    let gens: Vec<DiscrElement> = (0..a.rank()).map(|i| a.generator(i)).collect();
    let candidates: Vec<Vec<DiscrElement>> = gens
        .iter()
        .map(|g| {
            b.elements()
                .filter(|y| b.order_of(y) == a.order_of(g) && b.q(y) == a.q(g))
                .collect()
        })
        .collect();
    let mut chosen: Vec<DiscrElement> = Vec::new();
    search(a, b, &gens, &candidates, &mut chosen)
}

fn search(
    a: &FiniteQuadraticForm,
    b: &FiniteQuadraticForm,
    gens: &[DiscrElement],
    candidates: &[Vec<DiscrElement>],
    chosen: &mut Vec<DiscrElement>,
) -> bool {
    let i = chosen.len();
    if i == gens.len() {
        return DiscrSubgroup::generated(b, chosen).order() as u64 == b.order();
    }
    for y in &candidates[i] {
        if (0..i).all(|j| b.b(&chosen[j], y) == a.b(&gens[j], &gens[i])) {
            chosen.push(y.clone());
            if search(a, b, gens, candidates, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}
