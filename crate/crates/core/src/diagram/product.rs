use serde::{Deserialize, Serialize};

use super::{AffineDiagram, NodeRef, Side};
use crate::error::{Error, Result};

/// `A·B = [2]^contractible_loops · diagram`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductResult {
    pub diagram: AffineDiagram,
    pub contractible_loops: u32,
}

impl AffineDiagram {
    /// Stacks `self` on top of `other`, identifies the middle rows and
    /// traces connectivity through them.
    ///
    /// Middle-only cycles are classified by their winding on the cylinder:
    /// closing up with zero offset gives a contractible loop (a factor of
    /// `[2]`), closing with offset `±n` gives a non-contractible loop that
    /// stays in the product.
    pub fn multiply(&self, other: &AffineDiagram) -> Result<ProductResult> {
        let n = self.n;
        if n != other.n {
            return Err(Error::MismatchedRank {
                left: n,
                right: other.n,
            });
        }
        let nn = n as i64;
        let mut visited = vec![false; n];
        let mut mark = |pos: i64, visited: &mut Vec<bool>| {
            visited[((pos - 1).rem_euclid(nn)) as usize] = true;
        };

        let mut top = Vec::with_capacity(n);
        for p in 1..=nn {
            top.push(self.trace(other, NodeRef::top(p), &mut visited, &mut mark));
        }
        let mut bottom = Vec::with_capacity(n);
        for p in 1..=nn {
            bottom.push(self.trace(other, NodeRef::bottom(p), &mut visited, &mut mark));
        }

        let mut contractible = 0u32;
        let mut winding = 0u32;
        for c in 1..=nn {
            if visited[(c - 1) as usize] {
                continue;
            }
            let mut cur = c;
            loop {
                let down = self.partner(NodeRef::bottom(cur));
                if down.side != Side::Bottom {
                    return Err(Error::Internal(format!(
                        "middle node {cur} escapes through the top factor"
                    )));
                }
                mark(down.pos, &mut visited);
                let up = other.partner(NodeRef::top(down.pos));
                if up.side != Side::Top {
                    return Err(Error::Internal(format!(
                        "middle node {} escapes through the bottom factor",
                        down.pos
                    )));
                }
                mark(up.pos, &mut visited);
                cur = up.pos;
                if (cur - c).rem_euclid(nn) == 0 {
                    break;
                }
            }
            match (cur - c) / nn {
                0 => contractible += 1,
                1 | -1 => winding += 1,
                d => {
                    return Err(Error::Internal(format!(
                        "middle cycle through {c} winds {d} times"
                    )))
                }
            }
        }

        let diagram = AffineDiagram {
            n,
            top,
            bottom,
            loops: self.loops + other.loops + winding,
        };
        if winding > 0 && diagram.vertical_count() > 0 {
            return Err(Error::Internal(
                "vertical edge coexists with a non-contractible middle cycle".into(),
            ));
        }
        debug_assert!(diagram.validate().is_empty(), "{:?}", diagram.validate());
        Ok(ProductResult {
            diagram,
            contractible_loops: contractible,
        })
    }

    /// Follows the path leaving outer node `start` (a top node of `self` or
    /// a bottom node of `other`) until it reaches another outer node.
    fn trace(
        &self,
        other: &AffineDiagram,
        start: NodeRef,
        visited: &mut Vec<bool>,
        mark: &mut impl FnMut(i64, &mut Vec<bool>),
    ) -> NodeRef {
        // `in_upper` says which factor the next edge belongs to.
        let (mut in_upper, mut node) = match start.side {
            Side::Top => (true, start),
            Side::Bottom => (false, start),
        };
        loop {
            if in_upper {
                let y = self.partner(node);
                match y.side {
                    Side::Top => return y,
                    Side::Bottom => {
                        mark(y.pos, visited);
                        in_upper = false;
                        node = NodeRef::top(y.pos);
                    }
                }
            } else {
                let y = other.partner(node);
                match y.side {
                    Side::Bottom => return y,
                    Side::Top => {
                        mark(y.pos, visited);
                        in_upper = true;
                        node = NodeRef::bottom(y.pos);
                    }
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::Arc;

    fn g(n: usize, i: usize) -> AffineDiagram {
        AffineDiagram::generator(n, i).unwrap()
    }

    fn mul(a: &AffineDiagram, b: &AffineDiagram) -> (AffineDiagram, u32) {
        let r = a.multiply(b).unwrap();
        (r.diagram, r.contractible_loops)
    }

    #[test]
    fn idempotent_up_to_delta() {
        assert_eq!(mul(&g(4, 1), &g(4, 1)), (g(4, 1), 1));
        assert_eq!(mul(&g(4, 4), &g(4, 4)), (g(4, 4), 1));
    }

    #[test]
    fn braid_relation_collapses() {
        let (e121, x) = {
            let (e12, x1) = mul(&g(4, 1), &g(4, 2));
            let (d, x2) = mul(&e12, &g(4, 1));
            (d, x1 + x2)
        };
        assert_eq!((e121, x), (g(4, 1), 0));
        let (inner, _) = mul(&g(4, 2), &g(4, 1));
        assert_eq!(mul(&g(4, 1), &inner), (g(4, 1), 0));
    }

    #[test]
    fn non_contractible_loop_from_alternating_product() {
        let (a, _) = mul(&g(4, 1), &g(4, 3));
        let (b, _) = mul(&g(4, 2), &g(4, 4));
        let (c, x) = mul(&a, &b);
        assert_eq!(x, 0);
        assert_eq!(c.loops(), 1);
        let arcs = |v: &[(i64, i64)]| v.iter().map(|&(l, r)| Arc { left: l, right: r }).collect();
        assert_eq!(c.top_arcs(), arcs(&[(1, 2), (3, 4)]));
        assert_eq!(c.bottom_arcs(), arcs(&[(2, 3), (4, 5)]));
        assert!(c.is_admissible());
        assert_eq!(c.length().unwrap(), 4);
        for k in 1..=4 {
            assert!(c.nu(k).unwrap() >= 1);
        }
    }

    #[test]
    fn unit_laws() {
        let id = AffineDiagram::identity(5).unwrap();
        let (d, _) = mul(&g(5, 2), &g(5, 3));
        assert_eq!(mul(&id, &d), (d.clone(), 0));
        assert_eq!(mul(&d, &id), (d, 0));
    }

    #[test]
    fn mismatched_rank() {
        assert!(g(4, 1).multiply(&g(5, 1)).is_err());
    }
}
