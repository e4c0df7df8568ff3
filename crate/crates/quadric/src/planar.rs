//! Planar combinatorial maps: darts with a twin involution and a rotation
//! system, plus a distinguished outer face.
//!
//! Faces are the orbits of `d -> rot_next[twin[d]]`.  A map is accepted only
//! when the rotation system is consistent, the dart graph is connected and
//! the embedding has genus zero (V - E + F = 2), which together with the
//! distinguished outer face makes the complex a disc: contractible, with the
//! outer face walk as its boundary path.
//!
//! The surgery primitives here (glue, wedge, rebuild) are the building blocks
//! for disc-diagram construction and reduction.  Callers re-validate after
//! composite surgeries; the primitives keep the dart bookkeeping honest but
//! do not know about square-complex labels.

use std::collections::{BTreeMap, BTreeSet};

use crate::{Error, Result};

pub(crate) const NONE: usize = usize::MAX;

/// A connected genus-zero combinatorial map with a distinguished outer face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarMap {
    /// Twin involution; `twin[d] != d` for all darts.
    pub(crate) twin: Vec<usize>,
    /// Next dart counterclockwise around the origin vertex.
    pub(crate) rot_next: Vec<usize>,
    /// Origin vertex of each dart.
    pub(crate) origin: Vec<usize>,
    /// Vertex names, unique within the map (not necessarily sorted).
    pub(crate) vnames: Vec<String>,
    /// Optional per-vertex labels into a target complex.
    pub(crate) vlabels: Option<Vec<String>>,
    /// A dart on the outer face; `NONE` iff the map is a single vertex.
    pub(crate) outer: usize,
}

impl PlanarMap {
    pub fn dart_count(&self) -> usize {
        self.twin.len()
    }

    pub fn edge_count(&self) -> usize {
        self.twin.len() / 2
    }

    pub fn vertex_count(&self) -> usize {
        self.vnames.len()
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vnames
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vnames[v]
    }

    pub fn vertex_id(&self, name: &str) -> Option<usize> {
        self.vnames.iter().position(|n| n == name)
    }

    pub fn label_of(&self, v: usize) -> Option<&str> {
        self.vlabels.as_ref().map(|l| l[v].as_str())
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.vlabels.as_deref()
    }

    pub fn twin(&self, d: usize) -> usize {
        self.twin[d]
    }

    pub fn origin_of(&self, d: usize) -> usize {
        self.origin[d]
    }

    pub fn target_of(&self, d: usize) -> usize {
        self.origin[self.twin[d]]
    }

    /// Next dart along the face of `d`.
    pub fn face_next(&self, d: usize) -> usize {
        self.rot_next[self.twin[d]]
    }

    pub fn face_orbit(&self, d: usize) -> Vec<usize> {
        let mut orbit = vec![d];
        let mut cur = self.face_next(d);
        while cur != d {
            orbit.push(cur);
            cur = self.face_next(cur);
        }
        orbit
    }

    /// All face orbits, each starting at its least dart, sorted by that dart.
    /// A single-vertex map has one (empty) face.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        if self.twin.is_empty() {
            return vec![Vec::new()];
        }
        let mut seen = vec![false; self.twin.len()];
        let mut out = Vec::new();
        for d in 0..self.twin.len() {
            if seen[d] {
                continue;
            }
            let orbit = self.face_orbit(d);
            for &x in &orbit {
                seen[x] = true;
            }
            out.push(orbit);
        }
        out
    }

    /// Index of the outer face within `faces()`.
    pub fn outer_face_index(&self) -> usize {
        if self.twin.is_empty() {
            return 0;
        }
        let faces = self.faces();
        faces
            .iter()
            .position(|f| f.contains(&self.outer))
            .expect("outer dart must lie on some face")
    }

    /// Darts of the outer face walk, starting at the distinguished dart.
    pub fn outer_walk(&self) -> Vec<usize> {
        if self.twin.is_empty() {
            return Vec::new();
        }
        self.face_orbit(self.outer)
    }

    /// Vertex names along the outer walk (one per dart; the walk is closed).
    pub fn outer_walk_vertices(&self) -> Vec<String> {
        self.outer_walk()
            .iter()
            .map(|&d| self.vnames[self.origin[d]].clone())
            .collect()
    }

    /// Labels along the outer walk, when present.
    pub fn outer_walk_labels(&self) -> Option<Vec<String>> {
        let labels = self.vlabels.as_ref()?;
        Some(
            self.outer_walk()
                .iter()
                .map(|&d| labels[self.origin[d]].clone())
                .collect(),
        )
    }

    /// Valence of a vertex: the number of dart ends at it.
    pub fn valence(&self, v: usize) -> usize {
        self.origin.iter().filter(|&&o| o == v).count()
    }

    pub fn darts_at(&self, v: usize) -> Vec<usize> {
        (0..self.twin.len())
            .filter(|&d| self.origin[d] == v)
            .collect()
    }

    /// The rotation cycle at `v` as an explicit list (empty for isolated).
    pub fn rotation_at(&self, v: usize) -> Vec<usize> {
        let Some(start) = (0..self.twin.len()).find(|&d| self.origin[d] == v) else {
            return Vec::new();
        };
        let mut cyc = vec![start];
        let mut cur = self.rot_next[start];
        while cur != start {
            cyc.push(cur);
            cur = self.rot_next[cur];
        }
        cyc
    }

    /// Structural validation: involution, rotation consistency, connectivity,
    /// genus zero.  When `square_faces` is set, every inner face must have
    /// degree 4.
    pub fn validate(&self, square_faces: bool) -> Result<()> {
        let n = self.twin.len();
        if n % 2 != 0 {
            return Err(Error::InvalidMap("odd number of darts".into()));
        }
        if self.vnames.is_empty() {
            return Err(Error::InvalidMap("no vertices".into()));
        }
        let mut names = self.vnames.clone();
        names.sort();
        if names.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidMap("duplicate vertex name".into()));
        }
        if let Some(l) = &self.vlabels {
            if l.len() != self.vnames.len() {
                return Err(Error::InvalidMap("label/vertex length mismatch".into()));
            }
        }
        if n == 0 {
            if self.vnames.len() != 1 {
                return Err(Error::InvalidMap(
                    "dartless map must be a single vertex".into(),
                ));
            }
            if self.outer != NONE {
                return Err(Error::InvalidMap("outer dart out of range".into()));
            }
            return Ok(());
        }
        if self.outer >= n {
            return Err(Error::InvalidMap("outer dart out of range".into()));
        }
        for d in 0..n {
            if self.twin[d] >= n || self.twin[d] == d || self.twin[self.twin[d]] != d {
                return Err(Error::InvalidMap(format!("bad twin at dart {d}")));
            }
            if self.rot_next[d] >= n {
                return Err(Error::InvalidMap(format!("bad rotation at dart {d}")));
            }
            if self.origin[d] >= self.vnames.len() {
                return Err(Error::InvalidMap(format!("bad origin at dart {d}")));
            }
        }
        // rot_next must be a permutation whose cycles are exactly the dart
        // sets of the vertices.
        let mut seen = vec![false; n];
        let mut vertex_seen = vec![false; self.vnames.len()];
        for d in 0..n {
            if seen[d] {
                continue;
            }
            let v = self.origin[d];
            if vertex_seen[v] {
                return Err(Error::InvalidMap(format!(
                    "vertex `{}` has a disconnected rotation cycle",
                    self.vnames[v]
                )));
            }
            vertex_seen[v] = true;
            let mut cur = d;
            loop {
                if self.origin[cur] != v {
                    return Err(Error::InvalidMap(format!(
                        "rotation at `{}` leaves the vertex",
                        self.vnames[v]
                    )));
                }
                seen[cur] = true;
                cur = self.rot_next[cur];
                if cur == d {
                    break;
                }
                if seen[cur] {
                    return Err(Error::InvalidMap("rotation is not a permutation".into()));
                }
            }
        }
        if vertex_seen.iter().any(|&s| !s) {
            return Err(Error::InvalidMap(
                "isolated vertex in a map with darts".into(),
            ));
        }
        // Connectivity over darts via twin and rot_next.
        let mut reach = vec![false; n];
        let mut stack = vec![0usize];
        reach[0] = true;
        while let Some(d) = stack.pop() {
            for nd in [self.twin[d], self.rot_next[d]] {
                if !reach[nd] {
                    reach[nd] = true;
                    stack.push(nd);
                }
            }
        }
        if reach.iter().any(|&r| !r) {
            return Err(Error::InvalidMap("map is disconnected".into()));
        }
        // Genus zero.
        let v = self.vnames.len();
        let e = n / 2;
        let f = self.faces().len();
        if v + f != e + 2 {
            return Err(Error::InvalidMap(format!("not planar: V={v} E={e} F={f}")));
        }
        if square_faces {
            let outer_idx = self.outer_face_index();
            for (i, face) in self.faces().iter().enumerate() {
                if i != outer_idx && face.len() != 4 {
                    return Err(Error::InvalidMap(format!(
                        "inner face of degree {} (expected 4)",
                        face.len()
                    )));
                }
            }
        }
        Ok(())
    }

    /// Map consisting of one isolated vertex.
    pub fn single_vertex(name: &str, label: Option<&str>) -> Self {
        PlanarMap {
            twin: Vec::new(),
            rot_next: Vec::new(),
            origin: Vec::new(),
            vnames: vec![name.to_string()],
            vlabels: label.map(|l| vec![l.to_string()]),
            outer: NONE,
        }
    }

    /// Map consisting of one edge a - b.  Darts: 0 = a->b, 1 = b->a.
    pub fn single_edge(a: &str, b: &str, labels: Option<(&str, &str)>) -> Self {
        PlanarMap {
            twin: vec![1, 0],
            rot_next: vec![0, 1],
            origin: vec![0, 1],
            vnames: vec![a.to_string(), b.to_string()],
            vlabels: labels.map(|(la, lb)| vec![la.to_string(), lb.to_string()]),
            outer: 0,
        }
    }

    /// A single n-gon face (n >= 2 allows bigons).  Vertices in boundary
    /// order; darts 2i = v_i -> v_{i+1}, 2i+1 its twin.  The inner face is
    /// the orbit of dart 0; the outer walk runs the opposite way.
    pub fn polygon(names: &[String], labels: Option<&[String]>) -> Result<Self> {
        let n = names.len();
        if n < 2 {
            return Err(Error::InvalidMap(
                "polygon needs at least 2 vertices".into(),
            ));
        }
        let mut twin = Vec::with_capacity(2 * n);
        let mut origin = Vec::with_capacity(2 * n);
        for i in 0..n {
            twin.push(2 * i + 1);
            twin.push(2 * i);
            origin.push(i);
            origin.push((i + 1) % n);
        }
        // At v_i the darts are 2i (to v_{i+1}) and 2(i-1)+1 (to v_{i-1}).
        let mut rot_next = vec![0; 2 * n];
        for i in 0..n {
            let fwd = 2 * i;
            let bwd = if i == 0 { 2 * n - 1 } else { 2 * (i - 1) + 1 };
            rot_next[fwd] = bwd;
            rot_next[bwd] = fwd;
        }
        let m = PlanarMap {
            twin,
            rot_next,
            origin,
            vnames: names.to_vec(),
            vlabels: labels.map(|l| l.to_vec()),
            outer: 1,
        };
        m.validate(false)?;
        debug_assert_eq!(m.face_orbit(0).len(), n);
        Ok(m)
    }

    /// An r x c grid of squares; vertex (i, j) is named `<i>.<j>` and labeled
    /// the same, for i in 0..=r, j in 0..=c.
    pub fn grid(rows: usize, cols: usize) -> Self {
        assert!(rows >= 1 && cols >= 1);
        let vid = |i: usize, j: usize| i * (cols + 1) + j;
        let mut vnames = Vec::new();
        for i in 0..=rows {
            for j in 0..=cols {
                vnames.push(format!("{i}.{j}"));
            }
        }
        // Horizontal edge (i,j)-(i,j+1): darts h(i,j) east and h(i,j)+1 west.
        // Vertical edge (i,j)-(i+1,j): darts v(i,j) south and v(i,j)+1 north.
        let h_count = (rows + 1) * cols;
        let h = |i: usize, j: usize| 2 * (i * cols + j);
        let v = |i: usize, j: usize| 2 * h_count + 2 * (i * (cols + 1) + j);
        let total = 2 * h_count + 2 * rows * (cols + 1);
        let mut twin = vec![0; total];
        let mut origin = vec![0; total];
        for i in 0..=rows {
            for j in 0..cols {
                twin[h(i, j)] = h(i, j) + 1;
                twin[h(i, j) + 1] = h(i, j);
                origin[h(i, j)] = vid(i, j);
                origin[h(i, j) + 1] = vid(i, j + 1);
            }
        }
        for i in 0..rows {
            for j in 0..=cols {
                twin[v(i, j)] = v(i, j) + 1;
                twin[v(i, j) + 1] = v(i, j);
                origin[v(i, j)] = vid(i, j);
                origin[v(i, j) + 1] = vid(i + 1, j);
            }
        }
        // Rotation at (i,j), counterclockwise with rows growing south:
        // east, north, west, south.
        let mut rot_next = vec![0; total];
        for i in 0..=rows {
            for j in 0..=cols {
                let mut cyc = Vec::new();
                if j < cols {
                    cyc.push(h(i, j)); // east
                }
                if i > 0 {
                    cyc.push(v(i - 1, j) + 1); // north
                }
                if j > 0 {
                    cyc.push(h(i, j - 1) + 1); // west
                }
                if i < rows {
                    cyc.push(v(i, j)); // south
                }
                for k in 0..cyc.len() {
                    rot_next[cyc[k]] = cyc[(k + 1) % cyc.len()];
                }
            }
        }
        let m = PlanarMap {
            twin,
            rot_next,
            origin,
            vnames: vnames.clone(),
            vlabels: Some(vnames),
            // The west-pointing dart of the top-left horizontal edge lies on
            // the outer face.
            outer: 1,
        };
        m.validate(true).expect("grid construction is planar");
        m
    }

    /// Forgets labels.
    pub fn without_labels(mut self) -> Self {
        self.vlabels = None;
        self
    }

    /// Replaces the whole label vector.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.vnames.len() {
            return Err(Error::InvalidLabels(
                "label count differs from vertex count".into(),
            ));
        }
        self.vlabels = Some(labels);
        Ok(self)
    }

    /// Glues `other` onto `self` along boundary paths.
    ///
    /// `seam` and `oseam` are consecutive outer-face darts of the respective
    /// maps (`seam[t+1] = face_next(seam[t])`), of equal nonzero length, and
    /// each must be a proper subset of its outer walk.  The edge of `seam[t]`
    /// is identified with the edge of `oseam[k-1-t]` and the seam vertices
    /// are merged accordingly (self's names win).  Returns the glued map and
    /// dart remaps for both inputs (`NONE` for deleted darts).
    pub fn glue(
        &self,
        seam: &[usize],
        other: &PlanarMap,
        oseam: &[usize],
    ) -> Result<(PlanarMap, Vec<usize>, Vec<usize>)> {
        let k = seam.len();
        if k == 0 || k != oseam.len() {
            return Err(Error::InvalidMap(
                "glue seams must have equal nonzero length".into(),
            ));
        }
        self.check_seam(seam)?;
        other.check_seam(oseam)?;
        // Seam vertex sequences u_0..u_k and w_0..w_k.
        let u: Vec<usize> = std::iter::once(self.origin[seam[0]])
            .chain(seam.iter().map(|&d| self.target_of(d)))
            .collect();
        let w: Vec<usize> = std::iter::once(other.origin[oseam[0]])
            .chain(oseam.iter().map(|&d| other.target_of(d)))
            .collect();
        // Label compatibility across the identification u_j ~ w_{k-j}.
        if let (Some(la), Some(lb)) = (&self.vlabels, &other.vlabels) {
            for j in 0..=k {
                if la[u[j]] != lb[w[k - j]] {
                    return Err(Error::InvalidLabels(format!(
                        "glue seam label mismatch: `{}` vs `{}`",
                        la[u[j]],
                        lb[w[k - j]]
                    )));
                }
            }
        }
        let n1 = self.twin.len();
        let n2 = other.twin.len();
        // Vertex merge map: other vertex -> self vertex for seam vertices.
        let mut wmap: BTreeMap<usize, usize> = BTreeMap::new();
        for j in 0..=k {
            wmap.insert(w[k - j], u[j]);
        }
        // New vertex numbering: self vertices keep ids; other non-seam
        // vertices appended.
        let mut other_vertex: Vec<usize> = vec![NONE; other.vnames.len()];
        let mut vnames = self.vnames.clone();
        let mut vlabels = self.vlabels.clone();
        for ov in 0..other.vnames.len() {
            if let Some(&sv) = wmap.get(&ov) {
                other_vertex[ov] = sv;
            } else {
                if vnames.contains(&other.vnames[ov]) {
                    return Err(Error::InvalidMap(format!(
                        "vertex name collision `{}` while gluing",
                        other.vnames[ov]
                    )));
                }
                other_vertex[ov] = vnames.len();
                vnames.push(other.vnames[ov].clone());
                if let Some(l) = &mut vlabels {
                    l.push(
                        other
                            .vlabels
                            .as_ref()
                            .ok_or_else(|| {
                                Error::InvalidLabels("labels on one side only".into())
                            })?[ov]
                            .clone(),
                    );
                }
            }
        }
        // Dart remaps: deleted seam darts get NONE.
        let deleted1: BTreeSet<usize> = seam.iter().copied().collect();
        let deleted2: BTreeSet<usize> = oseam.iter().copied().collect();
        let mut remap1 = vec![NONE; n1];
        let mut remap2 = vec![NONE; n2];
        let mut next = 0usize;
        for d in 0..n1 {
            if !deleted1.contains(&d) {
                remap1[d] = next;
                next += 1;
            }
        }
        for d in 0..n2 {
            if !deleted2.contains(&d) {
                remap2[d] = next;
                next += 1;
            }
        }
        let total = next;
        let mut twin = vec![NONE; total];
        let mut origin = vec![NONE; total];
        let mut rot_next = vec![NONE; total];
        for d in 0..n1 {
            if remap1[d] == NONE {
                continue;
            }
            origin[remap1[d]] = self.origin[d];
            if remap1[self.twin[d]] != NONE {
                twin[remap1[d]] = remap1[self.twin[d]];
            }
        }
        for d in 0..n2 {
            if remap2[d] == NONE {
                continue;
            }
            origin[remap2[d]] = other_vertex[other.origin[d]];
            if remap2[other.twin[d]] != NONE {
                twin[remap2[d]] = remap2[other.twin[d]];
            }
        }
        // Cross twins: twin(seam[t]) pairs with twin(oseam[k-1-t]).
        for t in 0..k {
            let a = remap1[self.twin[seam[t]]];
            let b = remap2[other.twin[oseam[k - 1 - t]]];
            twin[a] = b;
            twin[b] = a;
        }
        // Rotations at untouched vertices copy over.
        let seam_v1: BTreeSet<usize> = u.iter().copied().collect();
        let seam_v2: BTreeSet<usize> = w.iter().copied().collect();
        for d in 0..n1 {
            if remap1[d] != NONE && !seam_v1.contains(&self.origin[d]) {
                rot_next[remap1[d]] = remap1[self.rot_next[d]];
            }
        }
        for d in 0..n2 {
            if remap2[d] != NONE && !seam_v2.contains(&other.origin[d]) {
                rot_next[remap2[d]] = remap2[other.rot_next[d]];
            }
        }
        // Merged rotations along the seam: linearize each side after its
        // deleted dart (or after the kept seam twin at the path ends) and
        // concatenate.
        for j in 0..=k {
            let side1 = self.linearize_for_merge(
                u[j],
                if j < k { Some(seam[j]) } else { None },
                if j > 0 {
                    Some(self.twin[seam[j - 1]])
                } else {
                    None
                },
            )?;
            let side2 = other.linearize_for_merge(
                w[k - j],
                if k - j < k { Some(oseam[k - j]) } else { None },
                if k - j > 0 {
                    Some(other.twin[oseam[k - j - 1]])
                } else {
                    None
                },
            )?;
            let mut cyc: Vec<usize> = side1.into_iter().map(|d| remap1[d]).collect();
            cyc.extend(side2.into_iter().map(|d| remap2[d]));
            if cyc.is_empty() {
                return Err(Error::InvalidMap("seam vertex lost all darts".into()));
            }
            for t in 0..cyc.len() {
                rot_next[cyc[t]] = cyc[(t + 1) % cyc.len()];
            }
        }
        // New outer dart: the continuation of self's outer walk after the seam.
        let nxt = self.face_next(seam[k - 1]);
        if deleted1.contains(&nxt) {
            return Err(Error::InvalidMap(
                "seam consumes the whole outer face".into(),
            ));
        }
        let glued = PlanarMap {
            twin,
            rot_next,
            origin,
            vnames,
            vlabels,
            outer: remap1[nxt],
        };
        glued.validate(false)?;
        Ok((glued, remap1, remap2))
    }

    fn check_seam(&self, seam: &[usize]) -> Result<()> {
        let outer: BTreeSet<usize> = self.outer_walk().into_iter().collect();
        for &d in seam {
            if d >= self.twin.len() || !outer.contains(&d) {
                return Err(Error::InvalidMap("seam dart not on the outer face".into()));
            }
        }
        for t in 1..seam.len() {
            if self.face_next(seam[t - 1]) != seam[t] {
                return Err(Error::InvalidMap("seam darts not consecutive".into()));
            }
        }
        if seam.len() >= outer.len() {
            return Err(Error::InvalidMap(
                "seam must be a proper boundary subwalk".into(),
            ));
        }
        Ok(())
    }

    /// Rotation cycle at `v` linearized for a seam merge: ends right before
    /// the slot that the other side's darts will occupy.
    fn linearize_for_merge(
        &self,
        v: usize,
        deleted: Option<usize>,
        kept_twin: Option<usize>,
    ) -> Result<Vec<usize>> {
        let cyc = self.rotation_at(v);
        let anchor = deleted.or(kept_twin).ok_or_else(|| {
            Error::InvalidMap("seam vertex with neither deleted nor kept dart".into())
        })?;
        let pos = cyc
            .iter()
            .position(|&d| d == anchor)
            .ok_or_else(|| Error::InvalidMap("anchor dart missing from rotation".into()))?;
        // Linear order starting after the anchor; drop the anchor itself only
        // when it is the deleted dart.
        let mut out = Vec::with_capacity(cyc.len());
        for t in 1..=cyc.len() {
            let d = cyc[(pos + t) % cyc.len()];
            if Some(d) == deleted {
                continue;
            }
            out.push(d);
        }
        if deleted.is_none() {
            debug_assert_eq!(out.last().copied(), kept_twin);
        }
        Ok(out)
    }

    /// Wedges `other` onto `self` at a boundary vertex.
    ///
    /// `d1` and `d2` are outer darts (or `NONE` for a single-vertex map); the
    /// origins are merged, self's name wins.  The outer corners before `d1`
    /// and `d2` fuse into one outer face.
    pub fn wedge(
        &self,
        d1: usize,
        other: &PlanarMap,
        d2: usize,
    ) -> Result<(PlanarMap, Vec<usize>, Vec<usize>)> {
        if self.twin.is_empty() {
            // self is a single vertex; the merged vertex takes self's name.
            let v2 = if other.twin.is_empty() {
                0
            } else {
                other.origin[d2]
            };
            if let (Some(l1), Some(l2)) = (&self.vlabels, &other.vlabels) {
                if l1[0] != l2[v2] {
                    return Err(Error::InvalidLabels("wedge label mismatch".into()));
                }
            }
            let mut m = other.clone();
            if m.vnames.iter().any(|n| *n == self.vnames[0]) && m.vnames[v2] != self.vnames[0] {
                return Err(Error::InvalidMap(
                    "vertex name collision while wedging".into(),
                ));
            }
            m.vnames[v2] = self.vnames[0].clone();
            let remap2: Vec<usize> = (0..other.twin.len()).collect();
            return Ok((m, Vec::new(), remap2));
        }
        if other.twin.is_empty() {
            let v1 = self.origin[d1];
            if let (Some(l1), Some(l2)) = (&self.vlabels, &other.vlabels) {
                if l1[v1] != l2[0] {
                    return Err(Error::InvalidLabels("wedge label mismatch".into()));
                }
            }
            let remap1: Vec<usize> = (0..self.twin.len()).collect();
            return Ok((self.clone(), remap1, Vec::new()));
        }
        let outer1: BTreeSet<usize> = self.outer_walk().into_iter().collect();
        let outer2: BTreeSet<usize> = other.outer_walk().into_iter().collect();
        if !outer1.contains(&d1) || !outer2.contains(&d2) {
            return Err(Error::InvalidMap(
                "wedge darts must lie on the outer faces".into(),
            ));
        }
        let v1 = self.origin[d1];
        let v2 = other.origin[d2];
        if let (Some(l1), Some(l2)) = (&self.vlabels, &other.vlabels) {
            if l1[v1] != l2[v2] {
                return Err(Error::InvalidLabels("wedge label mismatch".into()));
            }
        }
        let n1 = self.twin.len();
        let n2 = other.twin.len();
        let mut vnames = self.vnames.clone();
        let mut vlabels = self.vlabels.clone();
        let mut other_vertex = vec![NONE; other.vnames.len()];
        for ov in 0..other.vnames.len() {
            if ov == v2 {
                other_vertex[ov] = v1;
            } else {
                if vnames.contains(&other.vnames[ov]) {
                    return Err(Error::InvalidMap(format!(
                        "vertex name collision `{}` while wedging",
                        other.vnames[ov]
                    )));
                }
                other_vertex[ov] = vnames.len();
                vnames.push(other.vnames[ov].clone());
                if let Some(l) = &mut vlabels {
                    l.push(
                        other
                            .vlabels
                            .as_ref()
                            .ok_or_else(|| {
                                Error::InvalidLabels("labels on one side only".into())
                            })?[ov]
                            .clone(),
                    );
                }
            }
        }
        let remap1: Vec<usize> = (0..n1).collect();
        let remap2: Vec<usize> = (n1..n1 + n2).collect();
        let mut twin = vec![NONE; n1 + n2];
        let mut rot_next = vec![NONE; n1 + n2];
        let mut origin = vec![NONE; n1 + n2];
        for d in 0..n1 {
            twin[d] = self.twin[d];
            rot_next[d] = self.rot_next[d];
            origin[d] = self.origin[d];
        }
        for d in 0..n2 {
            twin[n1 + d] = n1 + other.twin[d];
            rot_next[n1 + d] = n1 + other.rot_next[d];
            origin[n1 + d] = other_vertex[other.origin[d]];
        }
        // Merge rotations: [d1 .. pred1] ++ [d2 .. pred2].
        let cyc1 = self.rotation_at(v1);
        let cyc2 = other.rotation_at(v2);
        let p1 = cyc1.iter().position(|&d| d == d1).unwrap();
        let p2 = cyc2.iter().position(|&d| d == d2).unwrap();
        let mut cyc: Vec<usize> = (0..cyc1.len())
            .map(|t| cyc1[(p1 + t) % cyc1.len()])
            .collect();
        cyc.extend((0..cyc2.len()).map(|t| n1 + cyc2[(p2 + t) % cyc2.len()]));
        for t in 0..cyc.len() {
            rot_next[cyc[t]] = cyc[(t + 1) % cyc.len()];
        }
        let wedged = PlanarMap {
            twin,
            rot_next,
            origin,
            vnames,
            vlabels,
            outer: self.outer,
        };
        wedged.validate(false)?;
        Ok((wedged, remap1, remap2))
    }

    /// Deletes the given darts and vertices, compacting indices.
    ///
    /// `retwin` re-pairs surviving darts (both directions must be given);
    /// `rot_override` replaces whole rotation cycles (given in old dart ids);
    /// vertices in `vertex_merge` map onto their targets.  Rotations of other
    /// vertices simply drop deleted darts.  Faces are not checked here; the
    /// caller validates the final map.
    pub(crate) fn rebuild_without(
        &self,
        dead_darts: &BTreeSet<usize>,
        dead_vertices: &BTreeSet<usize>,
        vertex_merge: &BTreeMap<usize, usize>,
        retwin: &BTreeMap<usize, usize>,
        rot_override: &BTreeMap<usize, Vec<usize>>,
        new_outer: usize,
    ) -> Result<PlanarMap> {
        let n = self.twin.len();
        let mut dart_map = vec![NONE; n];
        let mut next = 0;
        for d in 0..n {
            if !dead_darts.contains(&d) {
                dart_map[d] = next;
                next += 1;
            }
        }
        let mut vmap = vec![NONE; self.vnames.len()];
        let mut vnames = Vec::new();
        let mut vlabels = self.vlabels.as_ref().map(|_| Vec::new());
        for v in 0..self.vnames.len() {
            if dead_vertices.contains(&v) || vertex_merge.contains_key(&v) {
                continue;
            }
            vmap[v] = vnames.len();
            vnames.push(self.vnames[v].clone());
            if let (Some(out), Some(src)) = (&mut vlabels, &self.vlabels) {
                out.push(src[v].clone());
            }
        }
        for (&from, &to) in vertex_merge {
            if vmap[to] == NONE {
                return Err(Error::InvalidMap("merge target deleted".into()));
            }
            vmap[from] = vmap[to];
        }
        let mut twin = vec![NONE; next];
        let mut rot_next = vec![NONE; next];
        let mut origin = vec![NONE; next];
        for d in 0..n {
            if dart_map[d] == NONE {
                continue;
            }
            let t = retwin.get(&d).copied().unwrap_or(self.twin[d]);
            if dart_map[t] == NONE {
                return Err(Error::InvalidMap(
                    "kept dart twinned to a deleted dart".into(),
                ));
            }
            twin[dart_map[d]] = dart_map[t];
            if vmap[self.origin[d]] == NONE {
                return Err(Error::InvalidMap("kept dart at a deleted vertex".into()));
            }
            origin[dart_map[d]] = vmap[self.origin[d]];
        }
        let mut overridden: BTreeSet<usize> = BTreeSet::new();
        for (&v, cyc) in rot_override {
            overridden.insert(v);
            let mapped: Vec<usize> = cyc.iter().map(|&d| dart_map[d]).collect();
            if mapped.iter().any(|&d| d == NONE) {
                return Err(Error::InvalidMap(
                    "rotation override uses a deleted dart".into(),
                ));
            }
            for t in 0..mapped.len() {
                rot_next[mapped[t]] = mapped[(t + 1) % mapped.len()];
            }
        }
        // Overrides are keyed by surviving representative; merged-away
        // vertices must not also carry overrides.
        for v in 0..self.vnames.len() {
            if overridden.contains(&v) || self.valence(v) == 0 {
                continue;
            }
            if vertex_merge.contains_key(&v) && !overridden.contains(vertex_merge.get(&v).unwrap())
            {
                return Err(Error::InvalidMap(
                    "merged vertex without a rotation override".into(),
                ));
            }
            if vertex_merge.contains_key(&v) {
                continue;
            }
            let cyc: Vec<usize> = self
                .rotation_at(v)
                .into_iter()
                .filter(|&d| dart_map[d] != NONE)
                .map(|d| dart_map[d])
                .collect();
            for t in 0..cyc.len() {
                rot_next[cyc[t]] = cyc[(t + 1) % cyc.len()];
            }
        }
        if new_outer >= n || dart_map[new_outer] == NONE {
            return Err(Error::InvalidMap("outer dart deleted by surgery".into()));
        }
        Ok(PlanarMap {
            twin,
            rot_next,
            origin,
            vnames,
            vlabels,
            outer: dart_map[new_outer],
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn square_faces_and_euler() {
        let sq = PlanarMap::polygon(&names(&["a", "b", "c", "d"]), None).unwrap();
        sq.validate(true).unwrap();
        assert_eq!(sq.faces().len(), 2);
        assert_eq!(sq.outer_walk().len(), 4);
        assert_eq!(sq.vertex_count(), 4);
        assert_eq!(sq.edge_count(), 4);
    }

    #[test]
    fn single_edge_walk() {
        let e = PlanarMap::single_edge("a", "b", None);
        e.validate(true).unwrap();
        assert_eq!(e.faces().len(), 1);
        assert_eq!(e.outer_walk_vertices(), vec!["a", "b"]);
    }

    #[test]
    fn grids_validate() {
        for (r, c) in [(1, 1), (1, 3), (2, 2), (3, 4)] {
            let g = PlanarMap::grid(r, c);
            g.validate(true).unwrap();
            let outer = g.outer_face_index();
            let inner: Vec<_> = g
                .faces()
                .into_iter()
                .enumerate()
                .filter(|(i, _)| *i != outer)
                .map(|(_, f)| f)
                .collect();
            assert_eq!(inner.len(), r * c);
            assert!(inner.iter().all(|f| f.len() == 4));
            assert_eq!(g.outer_walk().len(), 2 * (r + c));
        }
    }

    fn find_boundary_path(m: &PlanarMap, path: &[&str]) -> Vec<usize> {
        let walk = m.outer_walk();
        let n = walk.len();
        'outer: for s in 0..n {
            for (t, want) in path.windows(2).enumerate() {
                let d = walk[(s + t) % n];
                if m.vertex_name(m.origin_of(d)) != want[0]
                    || m.vertex_name(m.target_of(d)) != want[1]
                {
                    continue 'outer;
                }
            }
            return (0..path.len() - 1).map(|t| walk[(s + t) % n]).collect();
        }
        panic!("path not found on boundary");
    }

    #[test]
    fn glue_two_squares_into_domino() {
        let s1 = PlanarMap::polygon(&names(&["a", "b", "c", "d"]), None).unwrap();
        let s2 = PlanarMap::polygon(&names(&["w", "x", "y", "z"]), None).unwrap();
        let seam1 = find_boundary_path(&s1, &["c", "b"]);
        let seam2 = find_boundary_path(&s2, &["x", "w"]);
        let (g, _, _) = s1.glue(&seam1, &s2, &seam2).unwrap();
        g.validate(true).unwrap();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 7);
        assert_eq!(g.faces().len(), 3);
        assert_eq!(g.outer_walk().len(), 6);
    }

    #[test]
    fn glue_along_length_two_path() {
        // Two 1x2 strips glued along a length-2 boundary path: 9 vertices,
        // 12 edges, 4 squares, like a 2x2 grid.
        let a = PlanarMap::grid(1, 2);
        let b = {
            let b = PlanarMap::grid(1, 2);
            let vnames: Vec<String> = b.vnames.iter().map(|n| format!("b{n}")).collect();
            PlanarMap {
                vlabels: None,
                vnames,
                ..b
            }
        };
        let a = a.without_labels();
        let seam_a = find_boundary_path(&a, &["1.0", "1.1", "1.2"]);
        let seam_b = find_boundary_path(&b, &["b0.2", "b0.1", "b0.0"]);
        let (g, _, _) = a.glue(&seam_a, &b, &seam_b).unwrap();
        g.validate(true).unwrap();
        assert_eq!(g.vertex_count(), 9);
        assert_eq!(g.edge_count(), 12);
        assert_eq!(g.faces().len(), 5);
        assert_eq!(g.outer_walk().len(), 8);
    }

    #[test]
    fn wedge_two_edges() {
        let e1 = PlanarMap::single_edge("a", "b", None);
        let e2 = PlanarMap::single_edge("c", "d", None);
        let d1 = e1
            .outer_walk()
            .into_iter()
            .find(|&d| e1.vertex_name(e1.origin_of(d)) == "b")
            .unwrap();
        let d2 = e2
            .outer_walk()
            .into_iter()
            .find(|&d| e2.vertex_name(e2.origin_of(d)) == "c")
            .unwrap();
        let (g, _, _) = e1.wedge(d1, &e2, d2).unwrap();
        g.validate(true).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.outer_walk().len(), 4);
        assert!(g.vertex_id("b").is_some());
        assert!(g.vertex_id("c").is_none());
    }

    #[test]
    fn wedge_single_vertex() {
        let v = PlanarMap::single_vertex("x", None);
        let e = PlanarMap::single_edge("x", "y", None);
        let d = e.outer_walk()[0];
        let (g, _, _) = v.wedge(NONE, &e, d).unwrap();
        assert_eq!(g.vertex_count(), 2);
    }

    #[test]
    fn validation_rejects_broken_twin() {
        let mut sq = PlanarMap::polygon(&names(&["a", "b", "c", "d"]), None).unwrap();
        sq.twin[0] = 0;
        assert!(sq.validate(false).is_err());
    }
}
