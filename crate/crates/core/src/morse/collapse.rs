use crate::complex::{CellId, OrderComplex};
use crate::error::{invalid_arg, Result};
use crate::morse::Matching;

fn in_domain(domain: Option<&[bool]>, v: u32) -> bool {
    domain.is_none_or(|d| d[v as usize])
}

fn check_domain<T>(complex: &OrderComplex<T>, domain: Option<&[bool]>) -> Result<()> {
    if let Some(d) = domain {
        if d.len() != complex.poset().len() {
            return Err(invalid_arg(format!(
                "domain mask has {} entries for {} vertices",
                d.len(),
                complex.poset().len()
            )));
        }
    }
    Ok(())
}

/// Cone matching on the chains inside `domain`: every chain avoiding `apex`
/// is paired with the chain obtained by inserting it. `apex` must lie in the
/// domain and be comparable with every element of it.
///
/// `domain` is a vertex mask; `None` means the whole poset.
pub fn cone_matching<T>(complex: &OrderComplex<T>, domain: Option<&[bool]>, apex: u32) -> Result<Matching> {
    check_domain(complex, domain)?;
    let poset = complex.poset();
    if apex as usize >= poset.len() || !in_domain(domain, apex) {
        return Err(invalid_arg(format!("apex {apex} is not in the domain")));
    }
    for v in 0..poset.len() as u32 {
        if in_domain(domain, v) && !poset.comparable(v, apex) {
            return Err(invalid_arg(format!(
                "apex {apex} is not comparable with vertex {v}"
            )));
        }
    }
    let mut m = Matching::new(complex.num_cells());
    let mut buf = Vec::new();
    for c in complex.cells() {
        let verts = complex.vertices_of(c);
        if verts.contains(&apex) || !verts.iter().all(|&v| in_domain(domain, v)) {
            continue;
        }
        let pos = verts.partition_point(|&v| poset.less(v, apex));
        buf.clear();
        buf.extend_from_slice(&verts[..pos]);
        buf.push(apex);
        buf.extend_from_slice(&verts[pos..]);
        let upper = complex.find(&buf).expect("inserting a comparable element keeps a chain");
        m.insert(c, upper)?;
    }
    Ok(m)
}

/// Matching on the chains inside `domain` induced by a descending closure
/// operator `down` (indexed by vertex): `down(x) ≤ x`, order preserving and
/// idempotent. A chain is paired across the image of its lowest element not
/// fixed by `down`; chains of fixed points stay critical.
pub fn closure_matching<T>(complex: &OrderComplex<T>, domain: Option<&[bool]>, down: &[u32]) -> Result<Matching> {
    check_domain(complex, domain)?;
    let poset = complex.poset();
    if down.len() != poset.len() {
        return Err(invalid_arg(format!(
            "map has {} entries for {} vertices",
            down.len(),
            poset.len()
        )));
    }
    let members: Vec<u32> = (0..poset.len() as u32).filter(|&v| in_domain(domain, v)).collect();
    for &x in &members {
        let y = down[x as usize];
        if y as usize >= poset.len() || !in_domain(domain, y) {
            return Err(invalid_arg(format!("image of vertex {x} leaves the domain")));
        }
        if !poset.le(y, x) {
            return Err(invalid_arg(format!("image of vertex {x} is not below it")));
        }
        if down[y as usize] != y {
            return Err(invalid_arg(format!("map is not idempotent at vertex {x}")));
        }
        for &z in poset.above(x) {
            if in_domain(domain, z) && !poset.le(y, down[z as usize]) {
                return Err(invalid_arg(format!(
                    "map is not order preserving on {x} < {z}"
                )));
            }
        }
    }
    let mut m = Matching::new(complex.num_cells());
    let mut buf = Vec::new();
    for c in complex.cells() {
        let verts = complex.vertices_of(c);
        if !verts.iter().all(|&v| in_domain(domain, v)) {
            continue;
        }
        let Some(pos) = verts.iter().position(|&x| down[x as usize] != x) else {
            continue;
        };
        let y = down[verts[pos] as usize];
        if verts.contains(&y) {
            // upper cell of a pair, reached from its face
            continue;
        }
        buf.clear();
        buf.extend_from_slice(&verts[..pos]);
        buf.push(y);
        buf.extend_from_slice(&verts[pos..]);
        let upper: CellId = complex.find(&buf).expect("fixed points below x lie below down(x)");
        m.insert(c, upper)?;
    }
    Ok(m)
}
