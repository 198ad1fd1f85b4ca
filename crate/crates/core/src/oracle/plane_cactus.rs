//! Direct enumeration of plane cacti as trees of polygons.

use std::collections::{BTreeMap, VecDeque};

use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Attachment {
    pub parent: usize,
    pub parent_slot: usize,
    pub own_slot: usize,
}

/// Polygons glued at vertices into a tree. Equality is isomorphism.
#[derive(Clone, Debug, Serialize)]
pub struct PlaneCactus {
    /// `(color, side count)` per polygon.
    polygons: Vec<(usize, usize)>,
    /// `None` for the root polygon 0.
    attachments: Vec<Option<Attachment>>,
    canonical: Vec<(usize, Vec<usize>)>,
    sym: usize,
}

impl PartialEq for PlaneCactus {
    fn eq(&self, other: &Self) -> bool {
        self.canonical == other.canonical
    }
}

impl Eq for PlaneCactus {}

impl PartialOrd for PlaneCactus {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PlaneCactus {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.canonical.cmp(&other.canonical)
    }
}

impl PlaneCactus {
    pub fn new(
        polygons: Vec<(usize, usize)>,
        attachments: Vec<Option<Attachment>>,
    ) -> Result<Self> {
        let k = polygons.len();
        if k == 0 || attachments.len() != k || attachments[0].is_some() {
            return Err(Error::InvalidInput(
                "polygon 0 must be the unattached root".into(),
            ));
        }
        if polygons.iter().any(|&(_, sides)| sides < 2) {
            return Err(Error::InvalidInput("polygons need at least 2 sides".into()));
        }
        for (i, a) in attachments.iter().enumerate().skip(1) {
            let a = a.ok_or_else(|| Error::InvalidInput(format!("polygon {i} is not attached")))?;
            if a.parent >= k || a.parent_slot >= polygons[a.parent].1 || a.own_slot >= polygons[i].1
            {
                return Err(Error::InvalidInput(format!(
                    "attachment of polygon {i} out of range"
                )));
            }
            // Walking up must reach the root without revisiting.
            let mut seen = vec![false; k];
            let mut x = i;
            while x != 0 {
                if seen[x] {
                    return Err(Error::InvalidInput("attachments contain a cycle".into()));
                }
                seen[x] = true;
                x = attachments[x].unwrap().parent;
            }
        }
        let mut cactus = PlaneCactus {
            polygons,
            attachments,
            canonical: Vec::new(),
            sym: 0,
        };
        let lists = cactus.vertex_lists();
        let colors: Vec<usize> = cactus.polygons.iter().map(|p| p.0).collect();
        check_colors(&colors, &lists)?;
        (cactus.canonical, cactus.sym) = canonical_form(&colors, &lists);
        Ok(cactus)
    }

    /// Builds from per-polygon counterclockwise vertex ids.
    pub fn from_vertex_lists(colors: &[usize], lists: &[Vec<usize>]) -> Result<Self> {
        let k = lists.len();
        let polygons: Vec<(usize, usize)> = colors
            .iter()
            .zip(lists)
            .map(|(&c, l)| (c, l.len()))
            .collect();
        let mut attachments = vec![None; k];
        let mut placed = vec![false; k];
        placed[0] = true;
        let mut queue = VecDeque::from([0usize]);
        while let Some(p) = queue.pop_front() {
            for (slot, v) in lists[p].iter().enumerate() {
                for q in 0..k {
                    if placed[q] {
                        continue;
                    }
                    if let Some(own) = lists[q].iter().position(|w| w == v) {
                        placed[q] = true;
                        attachments[q] = Some(Attachment {
                            parent: p,
                            parent_slot: slot,
                            own_slot: own,
                        });
                        queue.push_back(q);
                    }
                }
            }
        }
        if placed.iter().any(|&x| !x) {
            return Err(Error::InvalidInput("polygons are not connected".into()));
        }
        let vertices: std::collections::BTreeSet<usize> = lists.iter().flatten().copied().collect();
        let expected = lists.iter().map(Vec::len).sum::<usize>() + 1 - k;
        if vertices.len() != expected {
            return Err(Error::InvalidInput("polygons do not form a tree".into()));
        }
        Self::new(polygons, attachments)
    }

    pub fn polygons(&self) -> &[(usize, usize)] {
        &self.polygons
    }

    pub fn attachments(&self) -> &[Option<Attachment>] {
        &self.attachments
    }

    pub fn canonical_form(&self) -> &[(usize, Vec<usize>)] {
        &self.canonical
    }

    /// Order of the color-preserving rotation group.
    pub fn sym(&self) -> usize {
        self.sym
    }

    pub fn vertex_count(&self) -> usize {
        self.polygons.iter().map(|p| p.1).sum::<usize>() + 1 - self.polygons.len()
    }

    /// Counterclockwise vertex ids of each polygon, ids `0..vertex_count`.
    pub fn vertex_lists(&self) -> Vec<Vec<usize>> {
        let offsets: Vec<usize> = self
            .polygons
            .iter()
            .scan(0, |acc, p| {
                let start = *acc;
                *acc += p.1;
                Some(start)
            })
            .collect();
        let total = offsets.last().unwrap() + self.polygons.last().unwrap().1;
        let mut parent: Vec<usize> = (0..total).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            parent[x] = r;
            r
        }
        for (i, a) in self.attachments.iter().enumerate() {
            if let Some(a) = a {
                let x = find(&mut parent, offsets[a.parent] + a.parent_slot);
                let y = find(&mut parent, offsets[i] + a.own_slot);
                parent[y] = x;
            }
        }
        let mut ids = BTreeMap::new();
        let mut lists = Vec::new();
        for (i, p) in self.polygons.iter().enumerate() {
            let list = (0..p.1)
                .map(|s| {
                    let root = find(&mut parent, offsets[i] + s);
                    let next = ids.len();
                    *ids.entry(root).or_insert(next)
                })
                .collect();
            lists.push(list);
        }
        lists
    }
}

fn check_colors(colors: &[usize], lists: &[Vec<usize>]) -> Result<()> {
    let mut at_vertex: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (p, list) in lists.iter().enumerate() {
        for &v in list {
            at_vertex.entry(v).or_default().push(colors[p]);
        }
    }
    for cs in at_vertex.values_mut() {
        let before = cs.len();
        cs.sort_unstable();
        cs.dedup();
        if cs.len() != before {
            return Err(Error::InvalidInput(
                "two polygons of one color share a vertex".into(),
            ));
        }
    }
    Ok(())
}

/// Minimum encoding over all choices of root polygon (of least color) and
/// root rotation, with the number of choices attaining it.
fn canonical_form(colors: &[usize], lists: &[Vec<usize>]) -> (Vec<(usize, Vec<usize>)>, usize) {
    let k = lists.len();
    let mut at_vertex: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
    for (p, list) in lists.iter().enumerate() {
        for (slot, &v) in list.iter().enumerate() {
            at_vertex.entry(v).or_default().push((p, slot));
        }
    }
    for entries in at_vertex.values_mut() {
        entries.sort_by_key(|&(p, _)| colors[p]);
    }
    let min_color = *colors.iter().min().unwrap();
    let mut best: Option<Vec<(usize, Vec<usize>)>> = None;
    let mut count = 0;
    for root in (0..k).filter(|&p| colors[p] == min_color) {
        for rot in 0..lists[root].len() {
            let mut ids: BTreeMap<usize, usize> = BTreeMap::new();
            let mut visited = vec![false; k];
            visited[root] = true;
            let mut queue = VecDeque::from([(root, rot)]);
            let mut encoding = Vec::with_capacity(k);
            while let Some((p, start)) = queue.pop_front() {
                let n = lists[p].len();
                let mut labels = Vec::with_capacity(n);
                for i in 0..n {
                    let v = lists[p][(start + i) % n];
                    let next = ids.len();
                    labels.push(*ids.entry(v).or_insert(next));
                    for &(q, slot) in &at_vertex[&v] {
                        if !visited[q] {
                            visited[q] = true;
                            queue.push_back((q, slot));
                        }
                    }
                }
                encoding.push((colors[p], labels));
            }
            match &best {
                Some(b) if encoding > *b => {}
                Some(b) if encoding == *b => count += 1,
                _ => {
                    best = Some(encoding);
                    count = 1;
                }
            }
        }
    }
    (best.unwrap(), count)
}

/// Every plane cactus with one polygon of each size, polygon `i` colored
/// `i + 1`, each isomorphism class once, sorted by canonical form.
pub fn enumerate_plane_cacti(sizes: &[usize]) -> Result<Vec<PlaneCactus>> {
    let k = sizes.len();
    if k == 0 || sizes.iter().any(|&s| s < 2) {
        return Err(Error::InvalidInput("sizes must be at least 2".into()));
    }
    let polygons: Vec<(usize, usize)> =
        sizes.iter().enumerate().map(|(i, &s)| (i + 1, s)).collect();
    let mut found = BTreeMap::new();
    let mut parents = vec![0usize; k];
    loop {
        if is_tree(&parents) {
            let mut slots = vec![0usize; k];
            loop {
                let attachments = (0..k)
                    .map(|i| {
                        (i > 0).then(|| Attachment {
                            parent: parents[i],
                            parent_slot: slots[i],
                            own_slot: 0,
                        })
                    })
                    .collect();
                let cactus = PlaneCactus::new(polygons.clone(), attachments)?;
                found.entry(cactus.canonical.clone()).or_insert(cactus);
                if !advance(&mut slots[1..], |i| sizes[parents[i + 1]]) {
                    break;
                }
            }
        }
        if !advance(&mut parents[1..], |_| k) {
            break;
        }
    }
    Ok(found.into_values().collect())
}

fn is_tree(parents: &[usize]) -> bool {
    (1..parents.len()).all(|start| {
        let mut x = start;
        for _ in 0..parents.len() {
            if x == 0 {
                return true;
            }
            if parents[x] == x {
                return false;
            }
            x = parents[x];
        }
        x == 0
    })
}

/// Odometer increment with per-digit radix; false once it wraps.
fn advance(digits: &mut [usize], radix: impl Fn(usize) -> usize) -> bool {
    for i in 0..digits.len() {
        digits[i] += 1;
        if digits[i] < radix(i) {
            return true;
        }
        digits[i] = 0;
    }
    false
}

/// `sum 1/|Sym|` over a list of cacti.
pub fn weighted_total(cacti: &[PlaneCactus]) -> BigRational {
    cacti.iter().fold(BigRational::zero(), |acc, c| {
        acc + BigRational::new(1.into(), c.sym.into())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_plane_cacti(&[2, 2]).unwrap().len(), 1);
        assert_eq!(enumerate_plane_cacti(&[2, 2, 2]).unwrap().len(), 4);
        assert_eq!(enumerate_plane_cacti(&[3, 4, 5]).unwrap().len(), 10);
        assert_eq!(
            weighted_total(&enumerate_plane_cacti(&[5]).unwrap()),
            rat(1, 5)
        );
        assert_eq!(
            weighted_total(&enumerate_plane_cacti(&[2, 2, 2, 2]).unwrap()),
            int(25)
        );
    }

    #[test]
    fn middle_polygon_choices() {
        // With colors 1..3 the middle polygon touches both others.
        let cacti = enumerate_plane_cacti(&[3, 4, 5]).unwrap();
        let middle = |c: &PlaneCactus, p: usize| {
            let lists = c.vertex_lists();
            (0..3)
                .filter(|&q| q != p)
                .all(|q| lists[q].iter().any(|v| lists[p].contains(v)))
        };
        let mut per_middle = [0; 3];
        for c in &cacti {
            for (p, count) in per_middle.iter_mut().enumerate() {
                if middle(c, p) && !(0..3).all(|q| middle(c, q)) {
                    *count += 1;
                }
            }
        }
        // All three share one vertex in exactly one cactus.
        assert_eq!(per_middle, [3 - 1, 4 - 1, 5 - 1]);
    }

    #[test]
    fn vertex_lists_round_trip() {
        for c in enumerate_plane_cacti(&[2, 3, 2]).unwrap() {
            let colors: Vec<usize> = c.polygons().iter().map(|p| p.0).collect();
            let again = PlaneCactus::from_vertex_lists(&colors, &c.vertex_lists()).unwrap();
            assert_eq!(again, c);
        }
    }

    #[test]
    fn rejects_bad_trees() {
        let bad = PlaneCactus::new(
            vec![(1, 2), (2, 2), (3, 2)],
            vec![
                None,
                Some(Attachment {
                    parent: 2,
                    parent_slot: 0,
                    own_slot: 0,
                }),
                Some(Attachment {
                    parent: 1,
                    parent_slot: 1,
                    own_slot: 1,
                }),
            ],
        );
        assert!(bad.is_err());
        let same_color = PlaneCactus::new(
            vec![(1, 2), (1, 2)],
            vec![
                None,
                Some(Attachment {
                    parent: 0,
                    parent_slot: 0,
                    own_slot: 0,
                }),
            ],
        );
        assert!(same_color.is_err());
    }
}
