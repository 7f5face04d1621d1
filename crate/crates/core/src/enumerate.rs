//! Brute-force enumeration of connected noncrossing graphs on vertices
//! `0..n` in convex position.

use crate::error::{Error, Result};

pub const DEFAULT_MAX: usize = 8;
/// Upper bound on any configured maximum; chord masks are 64 bits wide.
pub const HARD_CAP: usize = 10;

/// Whether chords `{a,b}` and `{c,d}` (with `a < b`, `c < d`) cross in the interior.
pub fn chords_cross(a: usize, b: usize, c: usize, d: usize) -> bool {
    if a == c || a == d || b == c || b == d {
        return false;
    }
    let inside = |v: usize| a < v && v < b;
    inside(c) != inside(d)
}

/// An edge set on `n` vertices in convex position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChordGraph {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl ChordGraph {
    pub fn is_noncrossing(&self) -> bool {
        self.edges.iter().enumerate().all(|(x, &(a, b))| {
            self.edges[x + 1..]
                .iter()
                .all(|&(c, d)| !chords_cross(a, b, c, d))
        })
    }

    pub fn is_connected(&self) -> bool {
        let mut uf = UnionFind::new(self.n);
        for &(a, b) in &self.edges {
            uf.union(a, b);
        }
        uf.components == 1 || self.n == 0
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EnumStats {
    pub n: usize,
    pub connected_count: u64,
    /// Sum of edge counts over all connected noncrossing graphs.
    pub total_edges: u64,
    pub min_edges: Option<usize>,
    pub max_edges: Option<usize>,
}

struct UnionFind {
    parent: Vec<usize>,
    components: usize,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            components: n,
        }
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
            self.components -= 1;
        }
    }
}

struct Search<'a> {
    n: usize,
    chords: &'a [(usize, usize)],
    crosses: &'a [u64],
    chosen: Vec<usize>,
    stats: EnumStats,
}

impl Search<'_> {
    fn dfs(&mut self, idx: usize, blocked: u64) {
        if idx == self.chords.len() {
            self.leaf();
            return;
        }
        self.dfs(idx + 1, blocked);
        if blocked & (1 << idx) == 0 {
            self.chosen.push(idx);
            self.dfs(idx + 1, blocked | self.crosses[idx]);
            self.chosen.pop();
        }
    }

    fn leaf(&mut self) {
        let mut uf = UnionFind::new(self.n);
        for &c in &self.chosen {
            let (a, b) = self.chords[c];
            uf.union(a, b);
        }
        if uf.components != 1 {
            return;
        }
        let e = self.chosen.len();
        let s = &mut self.stats;
        s.connected_count += 1;
        s.total_edges += e as u64;
        s.min_edges = Some(s.min_edges.map_or(e, |m| m.min(e)));
        s.max_edges = Some(s.max_edges.map_or(e, |m| m.max(e)));
    }
}

/// Counts connected noncrossing graphs on `n` vertices by depth-first search
/// over the chords, adding a chord only when it crosses none already chosen.
pub fn enumerate(n: usize, max: usize) -> Result<EnumStats> {
    let max = max.min(HARD_CAP);
    if n > max {
        return Err(Error::OracleCap { n, max });
    }
    if n == 0 {
        return Err(Error::Precondition("enumeration needs n >= 1".into()));
    }
    let chords: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    let crosses: Vec<u64> = chords
        .iter()
        .map(|&(a, b)| {
            chords
                .iter()
                .enumerate()
                .filter(|&(_, &(c, d))| chords_cross(a, b, c, d))
                .fold(0u64, |m, (i, _)| m | (1 << i))
        })
        .collect();
    let mut search = Search {
        n,
        chords: &chords,
        crosses: &crosses,
        chosen: Vec::with_capacity(chords.len()),
        stats: EnumStats {
            n,
            ..Default::default()
        },
    };
    search.dfs(0, 0);
    Ok(search.stats)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn crossing_examples() {
        assert!(chords_cross(0, 2, 1, 3));
        assert!(!chords_cross(0, 1, 2, 3));
        assert!(!chords_cross(0, 3, 1, 3));
        assert!(!chords_cross(0, 3, 1, 2));
    }

    #[test]
    fn crossing_symmetric() {
        for a in 0..7 {
            for b in a + 1..7 {
                for c in 0..7 {
                    for d in c + 1..7 {
                        assert_eq!(chords_cross(a, b, c, d), chords_cross(c, d, a, b));
                    }
                }
            }
        }
    }

    #[test]
    fn small_counts() {
        let one = enumerate(1, DEFAULT_MAX).unwrap();
        assert_eq!((one.connected_count, one.total_edges), (1, 0));
        let four = enumerate(4, DEFAULT_MAX).unwrap();
        assert_eq!(four.connected_count, 23);
        assert_eq!(four.total_edges, 82);
        assert_eq!((four.min_edges, four.max_edges), (Some(3), Some(5)));
    }

    #[test]
    fn cap_enforced() {
        assert_eq!(
            enumerate(9, 8).unwrap_err(),
            Error::OracleCap { n: 9, max: 8 }
        );
        assert!(matches!(
            enumerate(11, 50),
            Err(Error::OracleCap { max: 10, .. })
        ));
        assert!(enumerate(0, 8).is_err());
    }

    #[test]
    fn chord_graph_predicates() {
        let g = ChordGraph {
            n: 4,
            edges: vec![(0, 2), (1, 3)],
        };
        assert!(!g.is_noncrossing());
        assert!(!g.is_connected());
        let h = ChordGraph {
            n: 4,
            edges: vec![(0, 1), (1, 2), (0, 3), (0, 2)],
        };
        assert!(h.is_noncrossing());
        assert!(h.is_connected());
    }
}
