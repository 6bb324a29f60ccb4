//! Legacy ASCII VTK export of high-order surface meshes and nodal fields,
//! plus a minimal reader for round-trip checks.
//!
//! Meshes of degree 1 export as ordinary triangles (cell type 5), degrees 2
//! and 3 as Lagrange triangles (cell type 69) with the standard point order:
//! the three corners, then the interior edge points of edges 0-1, 1-2 and
//! 2-0 (each walked from its first to its second corner), then the interior
//! points, recursively in the same layout. A companion writer subdivides
//! each curved element into p^2 straight triangles through the node lattice
//! for viewers without high-order cell support.

use std::io::Write as _;
use std::path::Path;

use crate::assembly::DofMap;
use crate::element::{multi_index_position, node_count};
use crate::mesh::HighOrderSurfaceMesh;
use crate::{Error, Result};

/// Multi-indices of a degree-p triangle in VTK Lagrange point order.
fn vtk_triangle_multi_indices(p: usize) -> Vec<(usize, usize, usize)> {
    if p == 0 {
        return vec![(0, 0, 0)];
    }
    let mut out = vec![(p, 0, 0), (0, p, 0), (0, 0, p)];
    for k in 1..p {
        out.push((p - k, k, 0));
    }
    for k in 1..p {
        out.push((0, p - k, k));
    }
    for k in 1..p {
        out.push((k, 0, p - k));
    }
    if p >= 3 {
        for (a, b, c) in vtk_triangle_multi_indices(p - 3) {
            out.push((a + 1, b + 1, c + 1));
        }
    }
    out
}

/// Permutation taking VTK point slots to local node indices.
pub fn vtk_point_order(p: usize) -> Vec<usize> {
    vtk_triangle_multi_indices(p)
        .into_iter()
        .map(|(a, b, c)| multi_index_position(p, a, b, c))
        .collect()
}

fn write_header(
    out: &mut impl std::io::Write,
    title: &str,
    points: &[[f64; 3]],
) -> std::io::Result<()> {
    writeln!(out, "# vtk DataFile Version 4.2")?;
    writeln!(out, "{title}")?;
    writeln!(out, "ASCII")?;
    writeln!(out, "DATASET UNSTRUCTURED_GRID")?;
    writeln!(out, "POINTS {} double", points.len())?;
    for p in points {
        writeln!(out, "{:.17e} {:.17e} {:.17e}", p[0], p[1], p[2])?;
    }
    Ok(())
}

fn write_point_data(
    out: &mut impl std::io::Write,
    n: usize,
    fields: &[(&str, &[f64])],
) -> Result<()> {
    if fields.is_empty() {
        return Ok(());
    }
    writeln!(out, "POINT_DATA {n}")?;
    for (name, values) in fields {
        if values.len() != n {
            return Err(Error::Config(format!(
                "field '{name}' has {} values for {n} points",
                values.len()
            )));
        }
        writeln!(out, "SCALARS {name} double 1")?;
        writeln!(out, "LOOKUP_TABLE default")?;
        for v in *values {
            writeln!(out, "{v:.17e}")?;
        }
    }
    Ok(())
}

/// Write the mesh with its exact high-order cells: type 5 triangles for
/// degree 1, type 69 Lagrange triangles for higher degrees. Each field is a
/// nodal vector in dof order.
pub fn write_mesh_vtk(
    path: &Path,
    mesh: &HighOrderSurfaceMesh,
    fields: &[(&str, &[f64])],
) -> Result<()> {
    let dofs = DofMap::new(mesh);
    let points: Vec<[f64; 3]> = (0..dofs.len())
        .map(|k| mesh.nodes[dofs.node(k) as usize])
        .collect();
    let perm = vtk_point_order(mesh.degree);
    let np = node_count(mesh.degree);
    let elements = mesh.active_elements();
    let mut out = std::io::BufWriter::new(std::fs::File::create(path)?);
    write_header(&mut out, "surface mesh", &points)?;
    writeln!(out, "CELLS {} {}", elements.len(), elements.len() * (np + 1))?;
    for &e in &elements {
        let nodes = &mesh.elements[e as usize].nodes;
        let mut line = String::with_capacity(8 * (np + 1));
        line.push_str(&np.to_string());
        for &slot in &perm {
            let d = dofs
                .dof(nodes[slot])
                .expect("active element nodes are dofs");
            line.push(' ');
            line.push_str(&d.to_string());
        }
        writeln!(out, "{line}")?;
    }
    writeln!(out, "CELL_TYPES {}", elements.len())?;
    let cell_type = if mesh.degree == 1 { 5 } else { 69 };
    for _ in &elements {
        writeln!(out, "{cell_type}")?;
    }
    write_point_data(&mut out, points.len(), fields)?;
    Ok(())
}

/// Write the mesh with every curved element subdivided into p^2 straight
/// triangles through its node lattice (all cells type 5), for viewers that
/// cannot render Lagrange cells. Shares the dof points and fields layout of
/// `write_mesh_vtk`.
pub fn write_linearized_vtk(
    path: &Path,
    mesh: &HighOrderSurfaceMesh,
    fields: &[(&str, &[f64])],
) -> Result<()> {
    let dofs = DofMap::new(mesh);
    let points: Vec<[f64; 3]> = (0..dofs.len())
        .map(|k| mesh.nodes[dofs.node(k) as usize])
        .collect();
    let p = mesh.degree;
    // lattice coordinates (a, b) -> local node index
    let local = |a: usize, b: usize| multi_index_position(p, p - a - b, a, b);
    let mut sub: Vec<[usize; 3]> = Vec::with_capacity(p * p);
    for a in 0..p {
        for b in 0..p - a {
            sub.push([local(a, b), local(a + 1, b), local(a, b + 1)]);
            if a + b + 1 < p {
                sub.push([local(a + 1, b), local(a + 1, b + 1), local(a, b + 1)]);
            }
        }
    }
    let elements = mesh.active_elements();
    let n_cells = elements.len() * sub.len();
    let mut out = std::io::BufWriter::new(std::fs::File::create(path)?);
    write_header(&mut out, "surface mesh (linearised)", &points)?;
    writeln!(out, "CELLS {} {}", n_cells, n_cells * 4)?;
    for &e in &elements {
        let nodes = &mesh.elements[e as usize].nodes;
        for tri in &sub {
            let d = |slot: usize| dofs.dof(nodes[slot]).expect("active element nodes are dofs");
            writeln!(out, "3 {} {} {}", d(tri[0]), d(tri[1]), d(tri[2]))?;
        }
    }
    writeln!(out, "CELL_TYPES {n_cells}")?;
    for _ in 0..n_cells {
        writeln!(out, "5")?;
    }
    write_point_data(&mut out, points.len(), fields)?;
    Ok(())
}

/// Parsed contents of a legacy ASCII unstructured-grid file.
#[derive(Debug)]
pub struct VtkData {
    pub points: Vec<[f64; 3]>,
    pub cells: Vec<Vec<usize>>,
    pub cell_types: Vec<u32>,
    pub point_scalars: Vec<(String, Vec<f64>)>,
}

/// Minimal reader for the files this module writes: POINTS, CELLS,
/// CELL_TYPES and SCALARS point data.
pub fn read_vtk(path: &Path) -> Result<VtkData> {
    let text = std::fs::read_to_string(path)?;
    let tokens: Vec<&str> = text
        .lines()
        .skip(2) // version comment and title, which may contain anything
        .flat_map(|l| l.split_whitespace())
        .collect();
    let mut i = 0usize;
    let mut data = VtkData {
        points: Vec::new(),
        cells: Vec::new(),
        cell_types: Vec::new(),
        point_scalars: Vec::new(),
    };
    let parse_usize = |t: &str| -> Result<usize> {
        t.parse()
            .map_err(|_| Error::Parse(format!("expected integer, got '{t}'")))
    };
    let parse_f64 = |t: &str| -> Result<f64> {
        t.parse()
            .map_err(|_| Error::Parse(format!("expected number, got '{t}'")))
    };
    let need = |i: usize, n: usize, len: usize| -> Result<()> {
        if i + n > len {
            Err(Error::Parse("truncated file".into()))
        } else {
            Ok(())
        }
    };
    while i < tokens.len() {
        match tokens[i] {
            "POINTS" => {
                need(i, 3, tokens.len())?;
                let n = parse_usize(tokens[i + 1])?;
                i += 3; // keyword, count, datatype
                need(i, 3 * n, tokens.len())?;
                for _ in 0..n {
                    data.points.push([
                        parse_f64(tokens[i])?,
                        parse_f64(tokens[i + 1])?,
                        parse_f64(tokens[i + 2])?,
                    ]);
                    i += 3;
                }
            }
            "CELLS" => {
                need(i, 3, tokens.len())?;
                let n = parse_usize(tokens[i + 1])?;
                i += 3; // keyword, cell count, total size
                for _ in 0..n {
                    need(i, 1, tokens.len())?;
                    let k = parse_usize(tokens[i])?;
                    i += 1;
                    need(i, k, tokens.len())?;
                    let mut cell = Vec::with_capacity(k);
                    for _ in 0..k {
                        cell.push(parse_usize(tokens[i])?);
                        i += 1;
                    }
                    data.cells.push(cell);
                }
            }
            "CELL_TYPES" => {
                need(i, 2, tokens.len())?;
                let n = parse_usize(tokens[i + 1])?;
                i += 2;
                need(i, n, tokens.len())?;
                for _ in 0..n {
                    data.cell_types.push(parse_usize(tokens[i])? as u32);
                    i += 1;
                }
            }
            "POINT_DATA" => {
                i += 2; // keyword, count (implied by points)
            }
            "SCALARS" => {
                need(i, 3, tokens.len())?;
                let name = tokens[i + 1].to_string();
                i += 3; // keyword, name, datatype
                if i < tokens.len() && tokens[i] == "1" {
                    i += 1; // optional component count
                }
                if i + 1 < tokens.len() && tokens[i] == "LOOKUP_TABLE" {
                    i += 2;
                }
                let n = data.points.len();
                need(i, n, tokens.len())?;
                let mut values = Vec::with_capacity(n);
                for _ in 0..n {
                    values.push(parse_f64(tokens[i])?);
                    i += 1;
                }
                data.point_scalars.push((name, values));
            }
            _ => {
                i += 1;
            }
        }
    }
    if data.cells.len() != data.cell_types.len() {
        return Err(Error::Parse(format!(
            "{} cells but {} cell types",
            data.cells.len(),
            data.cell_types.len()
        )));
    }
    Ok(data)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::assembly::Assembler;
    use crate::surface::LevelSetSurface;
    use tempfile::tempdir;

    fn flat_patch(p: usize) -> HighOrderSurfaceMesh {
        let surface = LevelSetSurface::from_expression("z").unwrap();
        HighOrderSurfaceMesh::parametric_patch(surface, [0.0, 1.0], [0.0, 1.0], 2, 2, p).unwrap()
    }

    #[test]
    fn point_order_references() {
        assert_eq!(vtk_point_order(1), vec![0, 1, 2]);
        assert_eq!(vtk_point_order(2), vec![0, 3, 5, 1, 4, 2]);
        assert_eq!(vtk_point_order(3), vec![0, 6, 9, 1, 3, 7, 8, 5, 2, 4]);
    }

    #[test]
    fn quadratic_cells_place_edge_points_between_their_corners() {
        let mesh = flat_patch(2);
        let dir = tempdir().unwrap();
        let path = dir.path().join("mesh.vtk");
        write_mesh_vtk(&path, &mesh, &[]).unwrap();
        let data = read_vtk(&path).unwrap();
        assert!(data.cell_types.iter().all(|&t| t == 69));
        for cell in &data.cells {
            assert_eq!(cell.len(), 6);
            // on a flat patch the lattice is affine: each edge point is the
            // exact midpoint of its corner pair, in VTK edge order
            for (slot, (a, b)) in [(3, (0, 1)), (4, (1, 2)), (5, (2, 0))] {
                let m = data.points[cell[slot]];
                let pa = data.points[cell[a]];
                let pb = data.points[cell[b]];
                for c in 0..3 {
                    assert!(
                        (m[c] - 0.5 * (pa[c] + pb[c])).abs() < 1e-12,
                        "edge point {slot} off midpoint"
                    );
                }
            }
        }
    }

    #[test]
    fn cubic_cells_walk_edges_in_corner_order() {
        let mesh = flat_patch(3);
        let dir = tempdir().unwrap();
        let path = dir.path().join("mesh.vtk");
        write_mesh_vtk(&path, &mesh, &[]).unwrap();
        let data = read_vtk(&path).unwrap();
        for cell in &data.cells {
            assert_eq!(cell.len(), 10);
            // first edge 0-1 point sits at one third from corner 0
            let p0 = data.points[cell[0]];
            let p1 = data.points[cell[1]];
            let e = data.points[cell[3]];
            for c in 0..3 {
                assert!((e[c] - (p0[c] + (p1[c] - p0[c]) / 3.0)).abs() < 1e-12);
            }
            // interior point is the centroid
            let p2 = data.points[cell[2]];
            let int = data.points[cell[9]];
            for c in 0..3 {
                assert!((int[c] - (p0[c] + p1[c] + p2[c]) / 3.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn fields_round_trip_through_write_and_read() {
        let mesh =
            HighOrderSurfaceMesh::icosphere(LevelSetSurface::unit_sphere(), 1, 2).unwrap();
        let asm = Assembler::new(&mesh).unwrap();
        let phi = asm.interpolate(|x| x[0] * x[1] + 0.25 * x[2]);
        let psi = asm.interpolate(|x| x[2] * x[2]);
        let dir = tempdir().unwrap();
        let path = dir.path().join("fields.vtk");
        write_mesh_vtk(&path, &mesh, &[("phi_a", &phi), ("pressure", &psi)]).unwrap();
        let data = read_vtk(&path).unwrap();
        assert_eq!(data.points.len(), asm.n_dofs());
        assert_eq!(data.cells.len(), mesh.active_element_count());
        let pos = asm.dof_positions();
        for (a, b) in data.points.iter().zip(&pos) {
            for c in 0..3 {
                assert!((a[c] - b[c]).abs() < 1e-15);
            }
        }
        assert_eq!(data.point_scalars.len(), 2);
        assert_eq!(data.point_scalars[0].0, "phi_a");
        assert_eq!(data.point_scalars[1].0, "pressure");
        for (a, b) in data.point_scalars[0].1.iter().zip(&phi) {
            assert_eq!(a, b, "scalar values round-trip exactly");
        }
    }

    #[test]
    fn linearized_export_covers_each_element_with_p_squared_triangles() {
        for p in [1usize, 2, 3] {
            let mesh =
                HighOrderSurfaceMesh::icosphere(LevelSetSurface::unit_sphere(), 0, p).unwrap();
            let dir = tempdir().unwrap();
            let path = dir.path().join("lin.vtk");
            write_linearized_vtk(&path, &mesh, &[]).unwrap();
            let data = read_vtk(&path).unwrap();
            assert_eq!(
                data.cells.len(),
                mesh.active_element_count() * p * p,
                "degree {p}"
            );
            assert!(data.cell_types.iter().all(|&t| t == 5));
            assert!(data.cells.iter().all(|c| c.len() == 3));
            // the sub-triangles of one element tile it: every lattice node
            // except the corners appears in more than one sub-triangle for
            // p > 1, and all referenced points exist
            for cell in &data.cells {
                assert!(cell.iter().all(|&i| i < data.points.len()));
            }
        }
    }

    #[test]
    fn reader_rejects_truncated_files() {
        let dir = tempdir().unwrap();
        let path = dir.path().join("bad.vtk");
        std::fs::write(
            &path,
            "# vtk DataFile Version 4.2\nbad\nASCII\nDATASET UNSTRUCTURED_GRID\nPOINTS 5 double\n0 0 0\n",
        )
        .unwrap();
        assert!(matches!(read_vtk(&path), Err(Error::Parse(_))));
    }
}
