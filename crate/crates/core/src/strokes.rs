//! Pen-stroke plans: a glyph's segment graph split into the fewest trails.

use alloc::vec;
use alloc::vec::Vec;

use crate::digit::{encode_nibble, ByteValue, Nibble, SegmentSet};
use crate::geometry::{segment_endpoints, Point};

/// Undirected edge between two lattice nodes.
pub type Edge = (Point, Point);

/// Ordered polylines that draw a glyph, each edge exactly once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrokePlan {
    pub strokes: Vec<Vec<Point>>,
}

impl StrokePlan {
    pub fn len(&self) -> usize {
        self.strokes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.strokes.is_empty()
    }

    /// Every edge of `edges` is drawn exactly once and nothing else is drawn.
    pub fn covers_exactly(&self, edges: &[Edge]) -> bool {
        let mut seen = vec![false; edges.len()];
        for stroke in &self.strokes {
            if stroke.len() < 2 {
                return false;
            }
            for w in stroke.windows(2) {
                let hit = edges
                    .iter()
                    .position(|&(a, b)| (a, b) == (w[0], w[1]) || (b, a) == (w[0], w[1]));
                match hit {
                    Some(i) if !seen[i] => seen[i] = true,
                    _ => return false,
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

/// Edges of a segment set inside one digit box, shifted right by
/// `column_offset` node columns.
pub fn segment_edges(s: SegmentSet, column_offset: u8) -> Vec<Edge> {
    s.iter()
        .map(|seg| {
            let (a, b) = segment_endpoints(seg);
            (
                Point::new(a.x + column_offset, a.y),
                Point::new(b.x + column_offset, b.y),
            )
        })
        .collect()
}

/// Lower bound on trails: each connected component with `2k` odd-degree
/// nodes needs `max(1, k)` of them.
pub fn min_trails(edges: &[Edge]) -> usize {
    let mut component: Vec<usize> = (0..edges.len()).collect();
    fn root(c: &mut [usize], mut i: usize) -> usize {
        while c[i] != i {
            c[i] = c[c[i]];
            i = c[i];
        }
        i
    }
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            let (a, b) = edges[i];
            let (c, d) = edges[j];
            if a == c || a == d || b == c || b == d {
                let (ri, rj) = (root(&mut component, i), root(&mut component, j));
                component[ri] = rj;
            }
        }
    }
    let mut roots: Vec<usize> = (0..edges.len()).map(|i| root(&mut component, i)).collect();
    let mut total = 0;
    let mut distinct = roots.clone();
    distinct.sort_unstable();
    distinct.dedup();
    for r in distinct {
        let members: Vec<Edge> = edges
            .iter()
            .zip(roots.iter_mut())
            .filter(|(_, root)| **root == r)
            .map(|(e, _)| *e)
            .collect();
        let odd = nodes(&members)
            .into_iter()
            .filter(|p| degree(&members, *p) % 2 == 1)
            .count();
        total += core::cmp::max(1, odd / 2);
    }
    total
}

fn nodes(edges: &[Edge]) -> Vec<Point> {
    let mut v: Vec<Point> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
    v.sort_unstable();
    v.dedup();
    v
}

fn degree(edges: &[Edge], p: Point) -> usize {
    edges.iter().filter(|&&(a, b)| a == p || b == p).count()
}

/// Direction preference when leaving a node: down, right, left, up.
fn direction_rank(from: Point, to: Point) -> u8 {
    if to.y < from.y {
        0
    } else if to.x > from.x {
        1
    } else if to.x < from.x {
        2
    } else {
        3
    }
}

struct Search<'a> {
    edges: &'a [Edge],
    target: usize,
    strokes: Vec<Vec<Point>>,
}

impl Search<'_> {
    fn remaining(&self, used: u32) -> Vec<Edge> {
        self.edges
            .iter()
            .enumerate()
            .filter(|(i, _)| used & (1 << i) == 0)
            .map(|(_, e)| *e)
            .collect()
    }

    /// Start nodes for a new stroke: odd-degree nodes first, then the rest,
    /// each group topmost then leftmost.
    fn start_candidates(&self, used: u32) -> Vec<Point> {
        let rest = self.remaining(used);
        let mut candidates = nodes(&rest);
        candidates.sort_by_key(|p| (degree(&rest, *p).is_multiple_of(2), core::cmp::Reverse(p.y), p.x));
        candidates
    }

    fn start(&mut self, used: u32) -> bool {
        if used.count_ones() as usize == self.edges.len() {
            return true;
        }
        let rest = self.remaining(used);
        if self.strokes.len() + min_trails(&rest) > self.target {
            return false;
        }
        for p in self.start_candidates(used) {
            self.strokes.push(vec![p]);
            if self.extend(used) {
                return true;
            }
            self.strokes.pop();
        }
        false
    }

    fn extend(&mut self, used: u32) -> bool {
        let here = *self.strokes.last().and_then(|s| s.last()).expect("open stroke");
        let mut moves: Vec<(u8, usize, Point)> = self
            .edges
            .iter()
            .enumerate()
            .filter(|(i, _)| used & (1 << i) == 0)
            .filter_map(|(i, &(a, b))| {
                if a == here {
                    Some((direction_rank(here, b), i, b))
                } else if b == here {
                    Some((direction_rank(here, a), i, a))
                } else {
                    None
                }
            })
            .collect();
        moves.sort_unstable();
        for (_, i, next) in moves {
            self.strokes.last_mut().unwrap().push(next);
            if self.extend(used | 1 << i) {
                return true;
            }
            self.strokes.last_mut().unwrap().pop();
        }
        // Lift the pen, but never leave an empty stroke behind.
        self.strokes.last().is_some_and(|s| s.len() > 1) && self.start(used)
    }
}

/// Splits an edge set into the fewest pen strokes.
///
/// Ties go to the stroke that starts at the topmost, leftmost odd-degree
/// node and heads downward first.
pub fn decompose(edges: &[Edge]) -> StrokePlan {
    assert!(edges.len() <= 32, "stroke search is limited to 32 edges");
    if edges.is_empty() {
        return StrokePlan { strokes: Vec::new() };
    }
    let mut search = Search {
        edges,
        target: min_trails(edges),
        strokes: Vec::new(),
    };
    let found = search.start(0);
    debug_assert!(found, "a decomposition meeting the parity bound always exists");
    StrokePlan {
        strokes: search.strokes,
    }
}

/// Stroke plan of digit `n`.
pub fn stroke_plan(n: Nibble) -> StrokePlan {
    decompose(&segment_edges(encode_nibble(n), 0))
}

/// Stroke plan of a ligature: the high digit's strokes, then the low
/// digit's, in ligature node columns.
pub fn ligature_stroke_plan(b: ByteValue) -> StrokePlan {
    let mut strokes = decompose(&segment_edges(encode_nibble(b.high()), 0)).strokes;
    strokes.extend(decompose(&segment_edges(encode_nibble(b.low()), 2)).strokes);
    StrokePlan { strokes }
}
