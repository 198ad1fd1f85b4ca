//! Topological types of circle gluings: which circles touch, where, and in
//! what cyclic order. Only pairwise tangencies are enumerated.

use std::collections::{BTreeMap, BTreeSet};

use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::rational::factorial;
use crate::algebra::Polynomial;
use crate::circles::{CircleSet, Length};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TypeCircle {
    pub color: usize,
    /// Index into [`CircleSet::circles`].
    pub id: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct TopologicalType {
    pub circles: Vec<TypeCircle>,
    /// Counterclockwise slot ids on each circle.
    pub contacts: Vec<Vec<usize>>,
    pub matching: Vec<[usize; 2]>,
    /// Sum of the genera of the components.
    pub genus: usize,
    /// Faces other than the discs bounded by the circles.
    pub faces: usize,
    pub sym: usize,
    #[serde(skip)]
    pub components: usize,
    #[serde(skip)]
    pub component_genera: Vec<usize>,
    #[serde(skip)]
    pub total_faces: usize,
    #[serde(skip)]
    pub disc_faces: usize,
    #[serde(skip)]
    canonical: Vec<u16>,
}

impl TopologicalType {
    pub fn contact_counts(&self) -> Vec<usize> {
        self.contacts.iter().map(Vec::len).collect()
    }

    pub fn tangencies(&self) -> usize {
        self.matching.len()
    }

    /// Euler characteristic summed over components.
    pub fn euler_characteristic(&self) -> i64 {
        self.component_genera
            .iter()
            .map(|&g| 2 - 2 * g as i64)
            .sum()
    }

    /// Pairs of circles (by position) that touch at least once.
    pub fn adjacency(&self) -> BTreeSet<(usize, usize)> {
        let owner = self.slot_owners();
        self.matching
            .iter()
            .map(|&[a, b]| {
                let (x, y) = (owner[a], owner[b]);
                (x.min(y), x.max(y))
            })
            .collect()
    }

    fn slot_owners(&self) -> Vec<usize> {
        let mut owner = vec![0; self.contacts.iter().map(Vec::len).sum()];
        for (c, slots) in self.contacts.iter().enumerate() {
            for &s in slots {
                owner[s] = c;
            }
        }
        owner
    }
}

/// Constraints on enumerated types. Contact counts come from
/// `contact_counts` if given, else from `genus`/`faces` for connected
/// types, else from `max_grade` (bound on `sum(k - 1)`).
#[derive(Clone, Debug, Default)]
pub struct TypeQuery {
    pub genus: Option<usize>,
    pub faces: Option<usize>,
    pub connected: bool,
    pub contact_counts: Option<Vec<usize>>,
    pub max_grade: Option<usize>,
}

pub struct FaceData {
    pub faces: usize,
    pub disc_faces: usize,
    pub component_genera: Vec<usize>,
}

/// Traces faces of the 4-valent graph formed by the circles. At each
/// tangency of circles `a` and `b` the counterclockwise order of arc ends is
/// `(a_in, a_out, b_in, b_out)`.
pub fn face_trace(contacts: &[Vec<usize>], matching: &[[usize; 2]]) -> Result<FaceData> {
    let slots: usize = contacts.iter().map(Vec::len).sum();
    // Half-edge 2s leaves slot s along its circle; 2s + 1 arrives at s.
    let mut theta = vec![0; 2 * slots];
    let mut owner = vec![0; slots];
    for (c, list) in contacts.iter().enumerate() {
        for (j, &s) in list.iter().enumerate() {
            let next = list[(j + 1) % list.len()];
            theta[2 * s] = 2 * next + 1;
            theta[2 * next + 1] = 2 * s;
            owner[s] = c;
        }
    }
    let mut rho = vec![usize::MAX; 2 * slots];
    for &[s, t] in matching {
        rho[2 * s + 1] = 2 * s;
        rho[2 * s] = 2 * t + 1;
        rho[2 * t + 1] = 2 * t;
        rho[2 * t] = 2 * s + 1;
    }
    if rho.contains(&usize::MAX) {
        return Err(Error::InvalidInput("unmatched contact slot".into()));
    }
    let m = contacts.len();
    let mut parent: Vec<usize> = (0..m).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        if parent[x] != x {
            let r = find(parent, parent[x]);
            parent[x] = r;
        }
        parent[x]
    }
    for &[s, t] in matching {
        let (x, y) = (find(&mut parent, owner[s]), find(&mut parent, owner[t]));
        parent[x] = y;
    }
    let mut faces = 0;
    let mut discs = vec![0; m];
    let mut face_count: BTreeMap<usize, i64> = BTreeMap::new();
    let mut seen = vec![false; 2 * slots];
    for start in 0..2 * slots {
        if seen[start] {
            continue;
        }
        faces += 1;
        let mut h = start;
        let mut all_out = true;
        let mut circles = BTreeSet::new();
        while !seen[h] {
            seen[h] = true;
            all_out &= h % 2 == 0;
            circles.insert(owner[h / 2]);
            h = rho[theta[h]];
        }
        if all_out && circles.len() == 1 {
            discs[*circles.first().unwrap()] += 1;
        }
        let comp = find(&mut parent, owner[start / 2]);
        *face_count.entry(comp).or_default() += 1;
    }
    if discs.iter().any(|&d| d != 1) {
        return Err(Error::InvalidInput(
            "a circle does not bound exactly one disc".into(),
        ));
    }
    let mut tangencies: BTreeMap<usize, i64> = BTreeMap::new();
    for &[s, _] in matching {
        *tangencies.entry(find(&mut parent, owner[s])).or_default() += 1;
    }
    let mut component_genera = Vec::new();
    for (comp, f) in face_count {
        let chi = f - tangencies.get(&comp).copied().unwrap_or(0);
        assert!(
            chi % 2 == 0 && chi <= 2,
            "Euler characteristic {chi} is impossible"
        );
        component_genera.push(((2 - chi) / 2) as usize);
    }
    Ok(FaceData {
        faces,
        disc_faces: discs.iter().sum(),
        component_genera,
    })
}

fn contact_vectors(m: usize, query: &TypeQuery) -> Result<Vec<Vec<usize>>> {
    if let Some(k) = &query.contact_counts {
        if k.len() != m || k.contains(&0) {
            return Err(Error::InvalidInput(
                "need a positive contact count per circle".into(),
            ));
        }
        return Ok(vec![k.clone()]);
    }
    let (lo, hi) = match (query.connected, query.genus, query.faces, query.max_grade) {
        (true, Some(g), Some(p), _) => match (m + p + 2 * g).checked_sub(2) {
            Some(t) if t >= 1 => (2 * t, 2 * t),
            _ => return Ok(Vec::new()),
        },
        (_, _, _, Some(d)) => (m, m + d),
        _ => {
            return Err(Error::InvalidInput(
                "give contact counts, genus and faces of a connected type, or a grade bound".into(),
            ))
        }
    };
    // Entries >= 1 with an even sum in [lo, hi].
    fn rec(
        prefix: &mut Vec<usize>,
        m: usize,
        sum: usize,
        lo: usize,
        hi: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        if prefix.len() == m {
            if sum >= lo && sum % 2 == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        let reserve = m - prefix.len() - 1;
        for x in 1..=hi.saturating_sub(sum + reserve) {
            prefix.push(x);
            rec(prefix, m, sum + x, lo, hi, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if m > 0 {
        rec(&mut Vec::new(), m, 0, lo, hi, &mut out);
    }
    Ok(out)
}

/// All types over the circles of `set` meeting `query`, sorted by canonical
/// form, each with its automorphism order.
pub fn enumerate_topological_types(
    set: &CircleSet,
    query: &TypeQuery,
) -> Result<Vec<TopologicalType>> {
    let circles = set.circles();
    let m = circles.len();
    let colors: Vec<usize> = circles.iter().map(|c| c.color).collect();
    // Interchangeable circles: same color and same length.
    let mut class_of: BTreeMap<(usize, &Length), usize> = BTreeMap::new();
    let classes: Vec<usize> = circles
        .iter()
        .map(|c| {
            let next = class_of.len();
            *class_of.entry((c.color, &c.length)).or_insert(next)
        })
        .collect();
    // Interchangeable circles take non-increasing contact counts, so each
    // type is generated from one vector only.
    let vectors: Vec<Vec<usize>> = contact_vectors(m, query)?
        .into_iter()
        .filter(|k| (1..m).all(|c| (0..c).all(|b| classes[b] != classes[c] || k[b] >= k[c])))
        .collect();
    let per_vector: Vec<Vec<TopologicalType>> = vectors
        .par_iter()
        .map(|k| types_for_vector(&colors, &classes, k, query))
        .collect::<Result<_>>()?;
    let mut found: BTreeMap<Vec<u16>, TopologicalType> = BTreeMap::new();
    for t in per_vector.into_iter().flatten() {
        found.entry(t.canonical.clone()).or_insert(t);
    }
    Ok(found.into_values().collect())
}

fn types_for_vector(
    colors: &[usize],
    classes: &[usize],
    k: &[usize],
    query: &TypeQuery,
) -> Result<Vec<TopologicalType>> {
    let m = colors.len();
    let mut contacts = Vec::with_capacity(m);
    let mut owner = Vec::new();
    for (c, &kc) in k.iter().enumerate() {
        contacts.push((owner.len()..owner.len() + kc).collect::<Vec<_>>());
        owner.extend(std::iter::repeat(c).take(kc));
    }
    let relabelings = Relabelings::new(classes, k);
    let mut out: BTreeMap<Vec<u16>, TopologicalType> = BTreeMap::new();
    let mut partner = vec![usize::MAX; owner.len()];
    let mut visit = |partner: &[usize]| -> Result<()> {
        let (canonical, sym) = relabelings.canonical(&contacts, &owner, partner);
        if out.contains_key(&canonical) {
            return Ok(());
        }
        let matching: Vec<[usize; 2]> = (0..partner.len())
            .filter(|&s| s < partner[s])
            .map(|s| [s, partner[s]])
            .collect();
        let data = face_trace(&contacts, &matching)?;
        let components = data.component_genera.len();
        let genus = data.component_genera.iter().sum();
        let faces = data.faces - m;
        if (query.connected && components != 1)
            || query.genus.is_some_and(|g| g != genus)
            || query.faces.is_some_and(|p| p != faces)
        {
            return Ok(());
        }
        let t = TopologicalType {
            circles: (0..m)
                .map(|id| TypeCircle {
                    color: colors[id],
                    id,
                })
                .collect(),
            contacts: contacts.clone(),
            matching,
            genus,
            faces,
            sym,
            components,
            component_genera: data.component_genera,
            total_faces: data.faces,
            disc_faces: data.disc_faces,
            canonical: canonical.clone(),
        };
        out.insert(canonical, t);
        Ok(())
    };
    matchings(&owner, colors, &mut partner, &mut visit)?;
    Ok(out.into_values().collect())
}

/// Calls `visit` on every perfect matching joining slots of different colors.
fn matchings(
    owner: &[usize],
    colors: &[usize],
    partner: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]) -> Result<()>,
) -> Result<()> {
    let Some(s) = partner.iter().position(|&p| p == usize::MAX) else {
        return visit(partner);
    };
    for t in s + 1..partner.len() {
        if partner[t] == usize::MAX && colors[owner[t]] != colors[owner[s]] {
            partner[s] = t;
            partner[t] = s;
            matchings(owner, colors, partner, visit)?;
            partner[t] = usize::MAX;
        }
    }
    partner[s] = usize::MAX;
    Ok(())
}

/// Circle orders permuting only within classes, combined with rotations.
struct Relabelings {
    orders: Vec<Vec<usize>>,
    k: Vec<usize>,
}

impl Relabelings {
    fn new(classes: &[usize], k: &[usize]) -> Self {
        // new position -> old circle, circles of a class keep their positions
        // as a set.
        let m = classes.len();
        let mut orders = vec![Vec::with_capacity(m)];
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (c, &cl) in classes.iter().enumerate() {
            groups.entry(cl).or_default().push(c);
        }
        for pos in 0..m {
            let group = &groups[&classes[pos]];
            let mut next = Vec::new();
            for order in orders {
                for &c in group {
                    // Only circles with matching contact counts can swap.
                    if !order.contains(&c) && k[c] == k[pos] {
                        let mut o = order.clone();
                        o.push(c);
                        next.push(o);
                    }
                }
            }
            orders = next;
        }
        Relabelings {
            orders,
            k: k.to_vec(),
        }
    }

    fn canonical(
        &self,
        contacts: &[Vec<usize>],
        owner: &[usize],
        partner: &[usize],
    ) -> (Vec<u16>, usize) {
        let m = self.k.len();
        let mut best: Option<Vec<u16>> = None;
        let mut count = 0;
        let mut rot = vec![0usize; m];
        let mut new_pos = vec![0usize; m];
        for order in &self.orders {
            for (p, &c) in order.iter().enumerate() {
                new_pos[c] = p;
            }
            rot.fill(0);
            loop {
                // Slot s of circle c at index j sits at (new_pos[c], j - rot[c]).
                let mut code = Vec::with_capacity(2 * owner.len());
                for &c in order {
                    let kc = self.k[c];
                    for j in 0..kc {
                        let s = contacts[c][(j + rot[c]) % kc];
                        let t = partner[s];
                        let d = owner[t];
                        let jt = contacts[d].iter().position(|&x| x == t).unwrap();
                        let kd = self.k[d];
                        code.push(new_pos[d] as u16);
                        code.push(((jt + kd - rot[d]) % kd) as u16);
                    }
                }
                match &best {
                    Some(b) if code > *b => {}
                    Some(b) if code == *b => count += 1,
                    _ => {
                        best = Some(code);
                        count = 1;
                    }
                }
                let mut i = 0;
                loop {
                    if i == m {
                        break;
                    }
                    rot[i] += 1;
                    if rot[i] < self.k[i] {
                        break;
                    }
                    rot[i] = 0;
                    i += 1;
                }
                if i == m {
                    break;
                }
            }
        }
        let mut canonical: Vec<u16> = self.k.iter().map(|&x| x as u16).collect();
        canonical.extend(best.unwrap());
        (canonical, count)
    }
}

/// `(1/|Sym|) * prod l^(k-1) / (k-1)!` over the circles of the type.
pub fn type_volume(t: &TopologicalType, set: &CircleSet) -> Polynomial {
    let circles = set.circles();
    let mut volume = Polynomial::constant(BigRational::new(1.into(), t.sym.into()));
    for (c, slots) in t.circles.iter().zip(&t.contacts) {
        let d = slots.len() as i32 - 1;
        let l = circles[c.id].length.to_polynomial();
        let term = l.pow(d).expect("nonnegative power");
        volume = &volume * &term.scale(&BigRational::new(1.into(), factorial(d as u64)));
    }
    volume
}

/// Total volume of all types matching `query`.
pub fn total_volume(set: &CircleSet, query: &TypeQuery) -> Result<Polynomial> {
    Ok(enumerate_topological_types(set, query)?
        .iter()
        .map(|t| type_volume(t, set))
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    fn connected(g: usize, p: usize) -> TypeQuery {
        TypeQuery {
            genus: Some(g),
            faces: Some(p),
            connected: true,
            ..Default::default()
        }
    }

    #[test]
    fn figure_eight() {
        let set = CircleSet::parse("1:l;2:s").unwrap();
        let types = enumerate_topological_types(&set, &connected(0, 1)).unwrap();
        assert_eq!(types.len(), 1);
        assert_eq!(types[0].sym, 1);
        assert_eq!(types[0].total_faces, 3);
        assert_eq!(types[0].disc_faces, 2);
        assert_eq!(type_volume(&types[0], &set), Polynomial::one());
    }

    #[test]
    fn double_tangency() {
        let set = CircleSet::parse("1:l;2:s").unwrap();
        let types = enumerate_topological_types(&set, &connected(0, 2)).unwrap();
        assert_eq!(types.len(), 1);
        assert_eq!(types[0].sym, 2);
        assert_eq!(types[0].total_faces, 4);
        let expected = Polynomial::monomial(rat(1, 2), &[("l", 1), ("s", 1)]);
        assert_eq!(type_volume(&types[0], &set), expected);
    }

    #[test]
    fn three_circle_chains() {
        let set = CircleSet::parse("1:l1;2:l2;3:l3").unwrap();
        let types = enumerate_topological_types(&set, &connected(0, 1)).unwrap();
        assert_eq!(types.len(), 3);
        assert!(types.iter().all(|t| t.sym == 1));
        let total: Polynomial = types.iter().map(|t| type_volume(t, &set)).sum();
        assert_eq!(total.to_string(), "l1 + l2 + l3");
        let middle: Vec<_> = types
            .iter()
            .filter(|t| t.contact_counts() == vec![2, 1, 1])
            .collect();
        assert_eq!(type_volume(middle[0], &set), Polynomial::var("l1"));
    }

    #[test]
    fn triple_edge_symmetry() {
        let set = CircleSet::parse("1:l1;2:s1").unwrap();
        let q = TypeQuery {
            contact_counts: Some(vec![3, 3]),
            connected: true,
            genus: Some(0),
            faces: Some(3),
            ..Default::default()
        };
        let types = enumerate_topological_types(&set, &q).unwrap();
        assert_eq!(types.len(), 1);
        assert_eq!(types[0].sym, 3);
        let expected = Polynomial::monomial(rat(1, 12), &[("l1", 2), ("s1", 2)]);
        assert_eq!(type_volume(&types[0], &set), expected);
    }

    #[test]
    fn equal_lengths_are_interchangeable() {
        let set = CircleSet::parse("1:u,u;2:v").unwrap();
        let types = enumerate_topological_types(&set, &connected(0, 1)).unwrap();
        assert_eq!(types.len(), 1);
        assert_eq!(types[0].sym, 2);
        let expected = Polynomial::monomial(rat(1, 2), &[("v", 1)]);
        assert_eq!(type_volume(&types[0], &set), expected);
    }

    #[test]
    fn dimension_identity() {
        let set = CircleSet::parse("1:a,b;2:c").unwrap();
        let q = TypeQuery {
            max_grade: Some(4),
            ..Default::default()
        };
        for t in enumerate_topological_types(&set, &q).unwrap() {
            if t.components == 1 {
                let arcs: usize = t.contact_counts().iter().sum();
                assert_eq!(
                    arcs as i64 - 3,
                    4 * t.genus as i64 - 4 + 3 + 2 * t.faces as i64
                );
            }
            assert_eq!(t.disc_faces, 3);
        }
    }
}
