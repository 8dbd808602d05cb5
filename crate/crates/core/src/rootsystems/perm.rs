//! Permutation groups given by generators, via the Schreier–Sims algorithm.

/// Permutation of `0..n` stored as its image list.
pub type Perm = Vec<usize>;

pub fn identity(n: usize) -> Perm {
    (0..n).collect()
}

/// `a ∘ b`, i.e. apply `b` first.
pub fn compose(a: &[usize], b: &[usize]) -> Perm {
    b.iter().map(|&x| a[x]).collect()
}

pub fn inverse(a: &[usize]) -> Perm {
    let mut inv = vec![0; a.len()];
    for (i, &x) in a.iter().enumerate() {
        inv[x] = i;
    }
    inv
}

pub fn is_identity(a: &[usize]) -> bool {
    a.iter().enumerate().all(|(i, &x)| i == x)
}

#[derive(Clone, Debug)]
struct Level {
    base: usize,
    gens: Vec<Perm>,
    // transversal[b] maps the base point to b
    transversal: Vec<Option<Perm>>,
    orbit: Vec<usize>,
}

impl Level {
    fn new(base: usize, n: usize) -> Self {
        let mut l = Level { base, gens: Vec::new(), transversal: vec![None; n], orbit: Vec::new() };
        l.rebuild(n);
        l
    }

    fn rebuild(&mut self, n: usize) {
        self.transversal = vec![None; n];
        self.transversal[self.base] = Some(identity(n));
        self.orbit = vec![self.base];
        let mut i = 0;
        while i < self.orbit.len() {
            let b = self.orbit[i];
            for g in &self.gens {
                let c = g[b];
                if self.transversal[c].is_none() {
                    self.transversal[c] = Some(compose(g, self.transversal[b].as_ref().unwrap()));
                    self.orbit.push(c);
                }
            }
            i += 1;
        }
    }
}

/// Base and strong generating set of a permutation group.
#[derive(Clone, Debug)]
pub struct StabilizerChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabilizerChain {
    pub fn new(degree: usize, generators: &[Perm]) -> Self {
        let mut chain = StabilizerChain { degree, levels: Vec::new() };
        for g in generators {
            if is_identity(g) {
                continue;
            }
            let (res, j) = chain.sift(g.clone(), 0);
            if !is_identity(&res) {
                chain.add(res, 0, j);
            }
            chain.complete();
        }
        chain
    }

    fn add(&mut self, g: Perm, from: usize, to: usize) {
        for l in from..=to {
            if l == self.levels.len() {
                let base = g.iter().enumerate().find(|(i, x)| *i != **x).map(|(i, _)| i).unwrap();
                self.levels.push(Level::new(base, self.degree));
            }
            self.levels[l].gens.push(g.clone());
            self.levels[l].rebuild(self.degree);
        }
    }

    fn complete(&mut self) {
        'outer: loop {
            for i in (0..self.levels.len()).rev() {
                let level = &self.levels[i];
                for &b in &level.orbit {
                    let ub = level.transversal[b].as_ref().unwrap();
                    for s in &level.gens {
                        let sb = s[b];
                        let usb = level.transversal[sb].as_ref().unwrap();
                        let h = compose(&inverse(usb), &compose(s, ub));
                        let (res, j) = self.sift(h, i + 1);
                        if !is_identity(&res) {
                            self.add(res, i + 1, j);
                            continue 'outer;
                        }
                    }
                }
            }
            break;
        }
    }

    /// Strips `g` through the levels starting at `start`; returns the
    /// residue and the level where stripping stopped.
    fn sift(&self, mut g: Perm, start: usize) -> (Perm, usize) {
        for l in start..self.levels.len() {
            let level = &self.levels[l];
            let b = g[level.base];
            match &level.transversal[b] {
                Some(u) => g = compose(&inverse(u), &g),
                None => return (g, l),
            }
        }
        let n = self.levels.len();
        (g, n)
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    pub fn contains(&self, g: &[usize]) -> bool {
        g.len() == self.degree && is_identity(&self.sift(g.to_vec(), 0).0)
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    /// Every element exactly once, as products of transversal elements.
    pub fn elements(&self) -> Vec<Perm> {
        let mut out = vec![identity(self.degree)];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(out.len() * level.orbit.len());
            for &b in &level.orbit {
                let u = level.transversal[b].as_ref().unwrap();
                for g in &out {
                    next.push(compose(u, g));
                }
            }
            out = next;
        }
        out.sort();
        out
    }
}
