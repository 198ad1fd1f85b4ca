//! Merging all polygons of a cactus into the polygon of color 1, recording
//! where each merged polygon was attached.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::Serialize;

use super::plane_cactus::PlaneCactus;
use crate::error::{Error, Result};

/// An `n`-gon whose vertices carry the labels `2..=k`, each label once.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct MarkedPolygon {
    pub size: usize,
    pub marks: BTreeMap<usize, BTreeSet<usize>>,
}

impl MarkedPolygon {
    fn vertex_of(&self, label: usize) -> Option<usize> {
        self.marks
            .iter()
            .find(|(_, ls)| ls.contains(&label))
            .map(|(&v, _)| v)
    }
}

/// Working state: vertex lists per color (index `color - 1`).
struct Merge {
    polygons: Vec<Option<Vec<usize>>>,
}

impl Merge {
    fn holders(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.polygons
            .iter()
            .enumerate()
            .filter(move |(_, p)| p.as_ref().is_some_and(|l| l.contains(&v)))
            .map(|(i, _)| i)
    }

    /// The vertex where the path from polygon 0 to `target` leaves polygon 0,
    /// and the vertex where it enters `target`.
    fn path_ends(&self, target: usize) -> (usize, usize) {
        let mut reached: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
        let mut queue = VecDeque::from([0usize]);
        while let Some(p) = queue.pop_front() {
            for &v in self.polygons[p].as_ref().unwrap() {
                for q in self.holders(v).collect::<Vec<_>>() {
                    if q != 0 && !reached.contains_key(&q) {
                        reached.insert(q, (p, v));
                        queue.push_back(q);
                    }
                }
            }
        }
        let (mut prev, b) = reached[&target];
        let mut a = b;
        while prev != 0 {
            let step = reached[&prev];
            a = step.1;
            prev = step.0;
        }
        (a, b)
    }

    /// The vertex of polygon 0 closest to `b`.
    fn projection(&self, b: usize) -> usize {
        let base = self.polygons[0].as_ref().unwrap();
        let mut seen = BTreeSet::from([b]);
        let mut queue = VecDeque::from([b]);
        while let Some(v) = queue.pop_front() {
            if base.contains(&v) {
                return v;
            }
            for p in self.holders(v).filter(|&p| p != 0).collect::<Vec<_>>() {
                for &w in self.polygons[p].as_ref().unwrap() {
                    if seen.insert(w) {
                        queue.push_back(w);
                    }
                }
            }
        }
        unreachable!("cactus is connected")
    }
}

/// Requires the polygon colors to be exactly `1..=k`, `k >= 2`.
pub fn encode_cactus(c: &PlaneCactus) -> Result<MarkedPolygon> {
    let k = c.polygons().len();
    let mut by_color = vec![None; k];
    for (list, &(color, _)) in c.vertex_lists().into_iter().zip(c.polygons()) {
        if color == 0 || color > k || by_color[color - 1].is_some() {
            return Err(Error::InvalidInput("colors must be 1..k, each once".into()));
        }
        by_color[color - 1] = Some(list);
    }
    if k < 2 {
        return Err(Error::InvalidInput(
            "merging needs at least two polygons".into(),
        ));
    }
    let mut state = Merge { polygons: by_color };
    let mut marks: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
    for i in 1..k {
        let (a, b) = state.path_ends(i);
        let merged = state.polygons[i].take().unwrap();
        let at_b = merged.iter().position(|&v| v == b).unwrap();
        let rest: Vec<usize> = (1..merged.len())
            .map(|j| merged[(at_b + j) % merged.len()])
            .collect();
        let base = state.polygons[0].as_mut().unwrap();
        let at_a = base.iter().position(|&v| v == a).unwrap();
        base.splice(at_a + 1..at_a + 1, rest);
        marks.entry(b).or_default().insert(i + 1);
    }
    let base = state.polygons[0].take().unwrap();
    let origin = base
        .iter()
        .position(|v| marks.get(v).is_some_and(|ls| ls.contains(&2)))
        .unwrap();
    let size = base.len();
    let marks = (0..size)
        .filter_map(|pos| {
            marks
                .remove(&base[(origin + pos) % size])
                .map(|ls| (pos, ls))
        })
        .collect();
    Ok(MarkedPolygon { size, marks })
}

/// Inverse of [`encode_cactus`], given the polygon sizes by color.
pub fn decode_cactus(m: &MarkedPolygon, sizes: &[usize]) -> Result<PlaneCactus> {
    let k = sizes.len();
    if k < 2 || sizes.iter().any(|&s| s < 2) {
        return Err(Error::InvalidMarking(
            "need at least two polygons of size >= 2".into(),
        ));
    }
    let n = sizes.iter().sum::<usize>() + 1 - k;
    if m.size != n {
        return Err(Error::InvalidMarking(format!(
            "polygon has {} vertices, sizes need {n}",
            m.size
        )));
    }
    let labels: Vec<usize> = m.marks.values().flatten().copied().collect();
    let expected: Vec<usize> = (2..=k).collect();
    let mut sorted = labels.clone();
    sorted.sort_unstable();
    if sorted != expected || m.marks.keys().any(|&v| v >= n) {
        return Err(Error::InvalidMarking(
            "labels must be 2..k on vertices of the polygon".into(),
        ));
    }
    let mut state = Merge {
        polygons: vec![None; k],
    };
    state.polygons[0] = Some((0..n).collect());
    for i in (1..k).rev() {
        let b = m.vertex_of(i + 1).unwrap();
        let a = state.projection(b);
        let base = state.polygons[0].as_mut().unwrap();
        if base.len() < sizes[i] {
            return Err(Error::InvalidMarking(format!(
                "polygon {} does not fit",
                i + 1
            )));
        }
        let mut polygon = vec![b];
        for _ in 1..sizes[i] {
            let at_a = base.iter().position(|&v| v == a).unwrap();
            let idx = (at_a + 1) % base.len();
            polygon.push(base.remove(idx));
        }
        state.polygons[i] = Some(polygon);
    }
    if state.polygons[0].as_ref().unwrap().len() != sizes[0] {
        return Err(Error::InvalidMarking("polygon 1 has the wrong size".into()));
    }
    let lists: Vec<Vec<usize>> = state.polygons.into_iter().map(Option::unwrap).collect();
    let colors: Vec<usize> = (1..=k).collect();
    PlaneCactus::from_vertex_lists(&colors, &lists)
        .map_err(|e| Error::InvalidMarking(e.to_string()))
}

/// Every marking with label 2 on vertex 0: the normal forms of the image.
pub fn all_markings(n: usize, k: usize) -> Vec<MarkedPolygon> {
    let mut out = Vec::new();
    let mut positions = vec![0usize; k.saturating_sub(2)];
    loop {
        let mut marks: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
        marks.entry(0).or_default().insert(2);
        for (j, &pos) in positions.iter().enumerate() {
            marks.entry(pos).or_default().insert(j + 3);
        }
        out.push(MarkedPolygon { size: n, marks });
        let mut i = 0;
        loop {
            if i == positions.len() {
                return out;
            }
            positions[i] += 1;
            if positions[i] < n {
                break;
            }
            positions[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::plane_cactus::enumerate_plane_cacti;

    fn check(sizes: &[usize]) {
        let n = sizes.iter().sum::<usize>() + 1 - sizes.len();
        let cacti = enumerate_plane_cacti(sizes).unwrap();
        let mut image = BTreeSet::new();
        for c in &cacti {
            let m = encode_cactus(c).unwrap();
            assert_eq!(m.size, c.vertex_count());
            assert_eq!(&decode_cactus(&m, sizes).unwrap(), c);
            image.insert(m);
        }
        assert_eq!(image.len(), cacti.len());
        let all: BTreeSet<_> = all_markings(n, sizes.len()).into_iter().collect();
        assert_eq!(image, all);
        assert_eq!(all.len(), n.pow(sizes.len() as u32 - 2));
    }

    #[test]
    fn bijection_small() {
        check(&[2, 2]);
        check(&[2, 2, 2]);
        check(&[3, 2, 4]);
        check(&[2, 3, 2, 2]);
    }

    #[test]
    fn rejects_bad_markings() {
        let mut m = all_markings(4, 3).remove(0);
        assert!(decode_cactus(&m, &[2, 2]).is_err());
        m.marks.get_mut(&0).unwrap().insert(7);
        assert!(decode_cactus(&m, &[2, 2, 2]).is_err());
    }
}
