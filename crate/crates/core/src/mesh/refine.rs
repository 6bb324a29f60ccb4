//! Red-green refinement and sibling coarsening of high-order surface meshes.
//!
//! Marked elements split red (four congruent children via projected edge
//! midpoints); conformity is restored by an iterative closure that red-splits
//! any element with two or more hanging edges and green-bisects elements with
//! exactly one. Green elements are transient: every refinement or coarsening
//! pass first undoes all green splits (lifting their marks to the parent), so
//! greens are never split themselves and never accumulate generations.
//! Coarsening merges a red sibling group only when all four childless
//! siblings are marked; conformity closure runs again afterwards.

use std::collections::HashMap;

use super::{ElementRecord, HighOrderSurfaceMesh, RefMap};
use crate::element::ShapeBasis;
use crate::{Error, Result};

/// Signed per-element refinement plan: positive = split levels, negative =
/// merge levels (used by the adapt cycle; refine/coarsen take the split maps).
#[derive(Debug, Clone, Default)]
pub struct MarkingPlan {
    pub refine: HashMap<u32, u32>,
    pub coarsen: HashMap<u32, u32>,
}

/// Result of a refinement or coarsening pass.
#[derive(Debug)]
pub struct RefineOutcome {
    pub mesh: HighOrderSurfaceMesh,
    /// Elements whose marked split was skipped by the edge-length floor.
    pub skipped_floor: Vec<u32>,
}

const REF_VERTEX: [[f64; 2]; 3] = [[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]];
/// Element edges by local vertex pairs, in canonical order 01, 12, 02.
const EDGES: [(usize, usize); 3] = [(0, 1), (1, 2), (0, 2)];

impl HighOrderSurfaceMesh {
    /// Split every marked element `count` times (red), then restore
    /// conformity. Marks must reference active elements; marks on green
    /// elements are lifted to their parents.
    pub fn refine(&self, marked: &HashMap<u32, u32>) -> Result<RefineOutcome> {
        self.apply_plan(&MarkingPlan { refine: marked.clone(), coarsen: HashMap::new() })
    }

    /// Merge marked sibling groups `count` generations, then restore
    /// conformity. A group merges only when all four childless red siblings
    /// are marked; root elements never merge.
    pub fn coarsen(&self, marked: &HashMap<u32, u32>) -> Result<RefineOutcome> {
        self.apply_plan(&MarkingPlan { refine: HashMap::new(), coarsen: marked.clone() })
    }

    /// Apply coarsening merges and refinement splits in one pass: greens are
    /// undone once, sibling groups merge (unanimity required, and a
    /// refinement mark on any sibling vetoes the group), marked elements
    /// split, and conformity closure runs once at the end.
    pub fn apply_plan(&self, plan: &MarkingPlan) -> Result<RefineOutcome> {
        let mut mesh = self.clone();
        let mut rmarks = validate_and_lift(&mesh, &plan.refine)?;
        let mut cmarks = validate_and_lift(&mesh, &plan.coarsen)?;
        cmarks.retain(|e, _| !rmarks.contains_key(e));
        undo_all_greens(&mut mesh);

        // merge phase
        loop {
            // group remaining coarsening marks by parent
            let mut by_parent: HashMap<u32, Vec<(u32, u32)>> = HashMap::new();
            for (&e, &count) in &cmarks {
                if count == 0 {
                    continue;
                }
                if let Some(p) = mesh.elements[e as usize].parent {
                    by_parent.entry(p).or_default().push((e, count));
                }
            }
            let mut parents: Vec<u32> = by_parent
                .iter()
                .filter(|(&p, group)| {
                    let rec = &mesh.elements[p as usize];
                    group.len() == 4
                        && rec.children.len() == 4
                        && rec.children.iter().all(|&c| mesh.elements[c as usize].is_leaf())
                })
                .map(|(&p, _)| p)
                .collect();
            parents.sort_unstable();
            if parents.is_empty() {
                break;
            }
            for p in parents {
                let group = &by_parent[&p];
                let next = group.iter().map(|&(_, c)| c).min().unwrap() - 1;
                let children = mesh.elements[p as usize].children.clone();
                for c in children {
                    mesh.elements[c as usize].dead = true;
                    cmarks.remove(&c);
                }
                mesh.elements[p as usize].children.clear();
                if next > 0 {
                    cmarks.insert(p, next);
                }
            }
        }

        // split phase, deterministic worklist ordering: ascending element id
        let mut skipped = Vec::new();
        let mut work: Vec<(u32, u32)> = rmarks.drain().collect();
        work.sort_unstable();
        let mut queue: std::collections::VecDeque<(u32, u32)> = work.into();
        while let Some((e, count)) = queue.pop_front() {
            if count == 0 || !mesh.elements[e as usize].is_leaf() {
                continue;
            }
            if mesh.min_edge(e) < 2.0 * mesh.h_floor {
                skipped.push(e);
                continue;
            }
            let children = red_split(&mut mesh, e)?;
            if count > 1 {
                for c in children {
                    queue.push_back((c, count - 1));
                }
            }
        }
        close_hanging_nodes(&mut mesh)?;
        skipped.sort_unstable();
        Ok(RefineOutcome { mesh, skipped_floor: skipped })
    }

    /// Refine every active element once.
    pub fn refine_uniform(&self) -> Result<RefineOutcome> {
        let marks: HashMap<u32, u32> = self.active_elements().iter().map(|&e| (e, 1)).collect();
        self.refine(&marks)
    }
}

/// Check marks reference active elements; lift marks on green elements to
/// their parents (max for refinement marks, min-of-pair for coarsening:
/// handled uniformly as max here since the pair merges into one mark — the
/// coarsen path re-checks unanimity per sibling group).
fn validate_and_lift(
    mesh: &HighOrderSurfaceMesh,
    marked: &HashMap<u32, u32>,
) -> Result<HashMap<u32, u32>> {
    let mut out: HashMap<u32, u32> = HashMap::new();
    for (&e, &count) in marked {
        let rec = mesh
            .elements
            .get(e as usize)
            .ok_or_else(|| Error::Mesh(format!("marked element {e} does not exist")))?;
        if !rec.is_leaf() {
            return Err(Error::Mesh(format!("marked element {e} is not active")));
        }
        if count == 0 {
            continue;
        }
        if rec.green {
            let p = rec.parent.expect("green elements always have parents");
            let slot = out.entry(p).or_insert(0);
            *slot = (*slot).max(count);
        } else {
            let slot = out.entry(e).or_insert(0);
            *slot = (*slot).max(count);
        }
    }
    Ok(out)
}

/// Remove every green closure pair, reactivating the parents.
fn undo_all_greens(mesh: &mut HighOrderSurfaceMesh) {
    for e in 0..mesh.elements.len() {
        let rec = &mesh.elements[e];
        if rec.dead || rec.children.is_empty() {
            continue;
        }
        let first = rec.children[0] as usize;
        if mesh.elements[first].green {
            let children = mesh.elements[e].children.clone();
            for c in children {
                debug_assert!(mesh.elements[c as usize].green);
                debug_assert!(mesh.elements[c as usize].children.is_empty());
                mesh.elements[c as usize].dead = true;
            }
            mesh.elements[e].children.clear();
        }
    }
}

/// Coordinates of an element's nodes, captured for borrow-free evaluation.
fn capture_map(
    mesh: &HighOrderSurfaceMesh,
    e: u32,
    basis: &ShapeBasis,
) -> impl Fn([f64; 2]) -> [f64; 3] {
    let coords: Vec<[f64; 3]> = mesh.elements[e as usize]
        .nodes
        .iter()
        .map(|&n| mesh.nodes[n as usize])
        .collect();
    let basis = basis.clone();
    move |u: [f64; 2]| {
        let mut x = [0.0; 3];
        for (alpha, p) in coords.iter().enumerate() {
            let phi = basis.eval(alpha, u);
            x[0] += phi * p[0];
            x[1] += phi * p[1];
            x[2] += phi * p[2];
        }
        x
    }
}

/// Midpoint vertex of edge (local pair) of element e, creating it by mapping
/// the reference edge midpoint through the parent geometry and projecting.
fn edge_midpoint(
    mesh: &mut HighOrderSurfaceMesh,
    e: u32,
    edge: usize,
    parent_map: &dyn Fn([f64; 2]) -> [f64; 3],
) -> Result<u32> {
    let (la, lb) = EDGES[edge];
    let verts = mesh.element_vertices(e);
    let (ga, gb) = (verts[la], verts[lb]);
    let key = (ga.min(gb), ga.max(gb));
    if let Some(&m) = mesh.edge_midpoints.get(&key) {
        return Ok(m);
    }
    let (ra, rb) = (REF_VERTEX[la], REF_VERTEX[lb]);
    let u = [0.5 * (ra[0] + rb[0]), 0.5 * (ra[1] + rb[1])];
    let x = mesh.surface.project(parent_map(u))?;
    let m = mesh.push_node(x);
    mesh.edge_midpoints.insert(key, m);
    Ok(m)
}

fn push_child(
    mesh: &mut HighOrderSurfaceMesh,
    parent: u32,
    vertices: [u32; 3],
    ref_map: RefMap,
    green: bool,
    parent_map: &dyn Fn([f64; 2]) -> [f64; 3],
) -> Result<u32> {
    let locate = |u: [f64; 2]| parent_map(ref_map.apply(u));
    let nodes = mesh.build_element_nodes(vertices, &locate)?;
    let generation = mesh.elements[parent as usize].generation + 1;
    let id = mesh.elements.len() as u32;
    mesh.elements.push(ElementRecord {
        nodes,
        parent: Some(parent),
        children: Vec::new(),
        generation,
        green,
        dead: false,
        ref_map: Some(ref_map),
    });
    Ok(id)
}

/// Red split: four congruent children through the projected edge midpoints.
fn red_split(mesh: &mut HighOrderSurfaceMesh, e: u32) -> Result<[u32; 4]> {
    debug_assert!(mesh.elements[e as usize].is_leaf());
    debug_assert!(!mesh.elements[e as usize].green, "green elements are never split");
    let basis = ShapeBasis::new(mesh.degree);
    let parent_map = capture_map(mesh, e, &basis);
    let [v0, v1, v2] = mesh.element_vertices(e);
    let m01 = edge_midpoint(mesh, e, 0, &parent_map)?;
    let m12 = edge_midpoint(mesh, e, 1, &parent_map)?;
    let m02 = edge_midpoint(mesh, e, 2, &parent_map)?;
    let half = 0.5;
    let specs: [([u32; 3], RefMap); 4] = [
        (
            [v0, m01, m02],
            RefMap { b: [[half, 0.0], [0.0, half]], c: [0.0, 0.0] },
        ),
        (
            [m01, v1, m12],
            RefMap { b: [[half, 0.0], [0.0, half]], c: [half, 0.0] },
        ),
        (
            [m02, m12, v2],
            RefMap { b: [[half, 0.0], [0.0, half]], c: [0.0, half] },
        ),
        (
            [m01, m12, m02],
            RefMap { b: [[0.0, -half], [half, half]], c: [half, 0.0] },
        ),
    ];
    let mut ids = [0u32; 4];
    for (k, (verts, rm)) in specs.into_iter().enumerate() {
        ids[k] = push_child(mesh, e, verts, rm, false, &parent_map)?;
    }
    mesh.elements[e as usize].children = ids.to_vec();
    Ok(ids)
}

/// Green split: bisect across the hanging edge, connecting its midpoint to
/// the opposite vertex.
fn green_split(mesh: &mut HighOrderSurfaceMesh, e: u32, edge: usize, m: u32) -> Result<[u32; 2]> {
    debug_assert!(mesh.elements[e as usize].is_leaf());
    let basis = ShapeBasis::new(mesh.degree);
    let parent_map = capture_map(mesh, e, &basis);
    let [v0, v1, v2] = mesh.element_vertices(e);
    let specs: [([u32; 3], RefMap); 2] = match edge {
        0 => [
            ([v0, m, v2], RefMap { b: [[0.5, 0.0], [0.0, 1.0]], c: [0.0, 0.0] }),
            ([m, v1, v2], RefMap { b: [[0.5, -0.5], [0.0, 1.0]], c: [0.5, 0.0] }),
        ],
        1 => [
            ([v0, v1, m], RefMap { b: [[1.0, 0.5], [0.0, 0.5]], c: [0.0, 0.0] }),
            ([v0, m, v2], RefMap { b: [[0.5, 0.0], [0.5, 1.0]], c: [0.0, 0.0] }),
        ],
        2 => [
            ([v0, v1, m], RefMap { b: [[1.0, 0.0], [0.0, 0.5]], c: [0.0, 0.0] }),
            ([m, v1, v2], RefMap { b: [[1.0, 0.0], [-0.5, 0.5]], c: [0.0, 0.5] }),
        ],
        _ => unreachable!(),
    };
    let mut ids = [0u32; 2];
    for (k, (verts, rm)) in specs.into_iter().enumerate() {
        ids[k] = push_child(mesh, e, verts, rm, true, &parent_map)?;
    }
    mesh.elements[e as usize].children = ids.to_vec();
    Ok(ids)
}

/// Hanging edges of an active element: edges whose recorded midpoint vertex
/// is currently a corner of some active element (i.e. the neighbour across
/// that edge is finer).
fn hanging_edges(
    mesh: &HighOrderSurfaceMesh,
    e: u32,
    vertex_active: &[bool],
) -> Vec<(usize, u32)> {
    let verts = mesh.element_vertices(e);
    let mut out = Vec::new();
    for (k, (la, lb)) in EDGES.iter().enumerate() {
        let (ga, gb) = (verts[*la], verts[*lb]);
        let key = (ga.min(gb), ga.max(gb));
        if let Some(&m) = mesh.edge_midpoints.get(&key) {
            if vertex_active[m as usize] {
                out.push((k, m));
            }
        }
    }
    out
}

fn active_vertex_flags(mesh: &HighOrderSurfaceMesh) -> Vec<bool> {
    let mut flags = vec![false; mesh.nodes.len()];
    for e in 0..mesh.elements.len() as u32 {
        if mesh.elements[e as usize].is_leaf() {
            for v in mesh.element_vertices(e) {
                flags[v as usize] = true;
            }
        }
    }
    flags
}

/// True when a half of the hanging edge (endpoint to midpoint) itself has an
/// active midpoint: the neighbour across the edge is at least two levels
/// finer, so a green bisection would leave its children hanging and the
/// element must be red-split instead.
fn half_edge_hangs(
    mesh: &HighOrderSurfaceMesh,
    e: u32,
    edge: usize,
    m: u32,
    vertex_active: &[bool],
) -> bool {
    let verts = mesh.element_vertices(e);
    let (la, lb) = EDGES[edge];
    for end in [verts[la], verts[lb]] {
        let key = (end.min(m), end.max(m));
        if let Some(&q) = mesh.edge_midpoints.get(&key) {
            if vertex_active[q as usize] {
                return true;
            }
        }
    }
    false
}

/// Restore conformity: red-split elements with >= 2 hanging edges (or one
/// hanging edge whose halves hang again) until none remain, then green-bisect
/// the single-hanging elements.
fn close_hanging_nodes(mesh: &mut HighOrderSurfaceMesh) -> Result<()> {
    loop {
        let flags = active_vertex_flags(mesh);
        let mut to_red = Vec::new();
        for e in 0..mesh.elements.len() as u32 {
            if !mesh.elements[e as usize].is_leaf() {
                continue;
            }
            let hang = hanging_edges(mesh, e, &flags);
            let needs_red = hang.len() >= 2
                || (hang.len() == 1 && half_edge_hangs(mesh, e, hang[0].0, hang[0].1, &flags));
            if needs_red {
                to_red.push(e);
            }
        }
        if to_red.is_empty() {
            break;
        }
        for e in to_red {
            if mesh.elements[e as usize].is_leaf() {
                red_split(mesh, e)?;
            }
        }
    }
    let flags = active_vertex_flags(mesh);
    let mut to_green = Vec::new();
    for e in 0..mesh.elements.len() as u32 {
        if !mesh.elements[e as usize].is_leaf() {
            continue;
        }
        let hang = hanging_edges(mesh, e, &flags);
        if hang.len() == 1 {
            to_green.push((e, hang[0].0, hang[0].1));
        }
    }
    for (e, edge, m) in to_green {
        green_split(mesh, e, edge, m)?;
    }
    // the closure must have eliminated every hanging edge
    let flags = active_vertex_flags(mesh);
    for e in 0..mesh.elements.len() as u32 {
        if mesh.elements[e as usize].is_leaf()
            && !hanging_edges(mesh, e, &flags).is_empty()
        {
            return Err(Error::Mesh(format!("element {e} still has a hanging node")));
        }
    }
    Ok(())
}
