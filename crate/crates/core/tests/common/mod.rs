//! Brute-force oracles. They read only the multiplication of a group and
//! work on plain boolean membership vectors, so they share no code with the
//! library's subgroup, lattice or formation machinery.

#![allow(dead_code)]

use std::collections::{HashMap, HashSet};
use std::sync::OnceLock;

use grouprod::corpus::{library_groups, LibraryGroup};
use grouprod::{Elem, Group, Limits, Subgroup};

/// Library groups of order at most 100, built once per test binary.
pub fn library() -> &'static [LibraryGroup] {
    static GROUPS: OnceLock<Vec<LibraryGroup>> = OnceLock::new();
    GROUPS.get_or_init(|| library_groups(100, Limits::default()).expect("library builds"))
}

pub type Members = Vec<bool>;

pub fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

pub fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn p_part(mut n: usize, p: usize) -> usize {
    let mut out = 1;
    while n.is_multiple_of(p) {
        n /= p;
        out *= p;
    }
    out
}

pub fn count(s: &Members) -> usize {
    s.iter().filter(|&&b| b).count()
}

pub fn subset(a: &Members, b: &Members) -> bool {
    a.iter().zip(b).all(|(&x, &y)| !x || y)
}

pub fn intersect(a: &Members, b: &Members) -> Members {
    a.iter().zip(b).map(|(&x, &y)| x && y).collect()
}

/// Cayley table copy of a group.
pub struct Table {
    pub n: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
}

impl Table {
    pub fn of(g: &Group) -> Table {
        let n = g.order();
        let mut mul = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                mul[a * n + b] = g.mul(Elem::new(a), Elem::new(b)).index() as u32;
            }
        }
        let inv = (0..n)
            .map(|a| (0..n).find(|&b| mul[a * n + b] == 0).expect("inverse") as u32)
            .collect();
        Table { n, mul, inv }
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b] as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn conj(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    pub fn comm(&self, x: usize, y: usize) -> usize {
        self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y))
    }

    pub fn whole(&self) -> Members {
        vec![true; self.n]
    }

    pub fn trivial(&self) -> Members {
        let mut s = vec![false; self.n];
        s[0] = true;
        s
    }

    /// Closure of `gens` under multiplication (finite, so inverses come free).
    pub fn closure(&self, gens: &[usize]) -> Members {
        let mut s = self.trivial();
        let mut frontier = vec![0];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !s[y] {
                    s[y] = true;
                    frontier.push(y);
                }
            }
        }
        s
    }

    pub fn elements_of(s: &Members) -> Vec<usize> {
        s.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i).collect()
    }

    pub fn join(&self, a: &Members, b: &Members) -> Members {
        let gens: Vec<usize> = Self::elements_of(a).into_iter().chain(Self::elements_of(b)).collect();
        self.closure(&gens)
    }

    /// Every subgroup, as the fixed point of joining cyclic subgroups.
    pub fn all_subgroups(&self) -> Vec<Members> {
        let mut cyclic: Vec<(Members, usize)> = Vec::new();
        let mut seen = HashSet::new();
        for x in 0..self.n {
            let c = self.closure(&[x]);
            if seen.insert(c.clone()) {
                cyclic.push((c, x));
            }
        }
        let mut all: Vec<(Members, Vec<usize>)> = cyclic.iter().map(|(c, x)| (c.clone(), vec![*x])).collect();
        let mut i = 0;
        while i < all.len() {
            let (s, gens) = all[i].clone();
            for (c, x) in &cyclic {
                if subset(c, &s) {
                    continue;
                }
                let mut g2 = gens.clone();
                g2.push(*x);
                let j = self.closure(&g2);
                if seen.insert(j.clone()) {
                    all.push((j, g2));
                }
            }
            i += 1;
        }
        let mut out: Vec<Members> = all.into_iter().map(|(s, _)| s).collect();
        out.sort_by_key(count);
        out
    }

    pub fn is_normal(&self, s: &Members) -> bool {
        let xs = Self::elements_of(s);
        (0..self.n).all(|g| xs.iter().all(|&x| s[self.conj(x, g)]))
    }

    /// Subgroup generated by `[x, y]` for `x` in `a` and `y` in `b`.
    pub fn commutator(&self, a: &Members, b: &Members) -> Members {
        let mut gens = Vec::new();
        for x in Self::elements_of(a) {
            for y in Self::elements_of(b) {
                gens.push(self.comm(x, y));
            }
        }
        gens.sort_unstable();
        gens.dedup();
        self.closure(&gens)
    }

    /// Last term of the lower central series.
    pub fn nilpotent_residual(&self) -> Members {
        let mut cur = self.whole();
        loop {
            let next = self.commutator(&cur, &self.whole());
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }
}

/// Whole-subgroup-list view of a group with the derived oracles.
pub struct Oracle {
    pub t: Table,
    pub subgroups: Vec<Members>,
    pub normals: Vec<Members>,
    index: HashMap<Members, usize>,
}

impl Oracle {
    pub fn new(g: &Group) -> Oracle {
        let t = Table::of(g);
        let subgroups = t.all_subgroups();
        let normals = subgroups.iter().filter(|s| t.is_normal(s)).cloned().collect();
        let index = subgroups.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        Oracle {
            t,
            subgroups,
            normals,
            index,
        }
    }

    pub fn index_of(&self, s: &Members) -> usize {
        self.index[s]
    }

    /// Whether `to` is reachable from `from` through members of `pool`
    /// (sorted by order) by steps of prime index.
    fn prime_step_reachable(pool: &[&Members], from: &Members, to: &Members) -> bool {
        let mut reached: Vec<&Members> = vec![from];
        for s in pool {
            let n = count(s);
            if n <= count(from) || !subset(from, s) {
                continue;
            }
            if reached.iter().any(|r| subset(r, s) && n.is_multiple_of(count(r)) && is_prime(n / count(r))) {
                if *s == to {
                    return true;
                }
                reached.push(s);
            }
        }
        from == to
    }

    /// `H` is ℙ-subnormal in `K`: a chain from `H` to `K` with prime indices.
    pub fn p_subnormal_in(&self, h: &Members, k: &Members) -> bool {
        let pool: Vec<&Members> = self.subgroups.iter().filter(|s| subset(s, k)).collect();
        Self::prime_step_reachable(&pool, h, k)
    }

    pub fn p_subnormal(&self, h: &Members) -> bool {
        self.p_subnormal_in(h, &self.t.whole())
    }

    /// `G/N` supersoluble: a normal series from `N` to `G` with prime
    /// factors, i.e. every chief factor above `N` has prime order.
    pub fn quotient_supersoluble(&self, n: &Members) -> bool {
        let pool: Vec<&Members> = self.normals.iter().filter(|s| subset(n, s)).collect();
        Self::prime_step_reachable(&pool, n, &self.t.whole())
    }

    pub fn quotient_nilpotent(&self, n: &Members) -> bool {
        subset(&self.t.nilpotent_residual(), n)
    }

    /// `G/N` has every Sylow subgroup ℙ-subnormal. Sylow subgroups of `G/N`
    /// are the images `PN/N`; subgroups above `N` correspond to those of `G/N`.
    pub fn quotient_w_supersoluble(&self, n: &Members) -> bool {
        let g = self.t.whole();
        let index = self.t.n / count(n);
        let pool: Vec<&Members> = self.subgroups.iter().filter(|s| subset(n, s)).collect();
        prime_divisors(index).into_iter().all(|p| {
            let target = p_part(self.t.n, p);
            let sylow = self.subgroups.iter().find(|s| count(s) == target).expect("Sylow subgroup exists");
            let pn = self.t.join(sylow, n);
            Self::prime_step_reachable(&pool, &pn, &g)
        })
    }

    pub fn quotient_in(&self, n: &Members, formation: &str) -> bool {
        match formation {
            "n" => self.quotient_nilpotent(n),
            "u" => self.quotient_supersoluble(n),
            "wu" => self.quotient_w_supersoluble(n),
            other => panic!("unknown formation {other}"),
        }
    }

    /// Intersection of all normal `N` with `G/N` in the formation.
    pub fn residual(&self, formation: &str) -> Members {
        self.normals
            .iter()
            .filter(|n| self.quotient_in(n, formation))
            .fold(self.t.whole(), |acc, n| intersect(&acc, n))
    }
}

pub fn members_of(g: &Group, h: &Subgroup) -> Members {
    (0..g.order()).map(|i| h.contains(Elem::new(i))).collect()
}

pub fn subgroup_of(g: &Group, m: &Members) -> Subgroup {
    let elems: Vec<Elem> = Table::elements_of(m).into_iter().map(Elem::new).collect();
    g.generate(&elems).expect("elements belong to the group")
}

pub fn formation_key(f: grouprod::formations::Formation) -> &'static str {
    f.short_name()
}
