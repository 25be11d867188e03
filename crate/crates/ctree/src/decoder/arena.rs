//! Flat arena for correction-tree nodes.
//!
//! Nodes are append-only and addressed by `u32` index; parent links let any
//! candidate correction path be replayed without recursion. Both search
//! directions share one arena during bidirectional decoding.

/// Sentinel parent index for root nodes.
pub const NO_PARENT: u32 = u32::MAX;

/// Which end of coll the frame a node's chain grows from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[repr(u8)]
pub enum Direction {
    Forward = 0,
    Backward = 1,
}

impl Direction {
    pub fn label(self) -> &'static str {
        match self {
            Direction::Forward => "fwd",
            Direction::Backward => "bwd",
        }
    }
}

/// One candidate-correction node.
///
/// `boundary` is a position in `0..=l`: a forward node at boundary `i` holds
/// the state after symbols `1..=i`; a backward node at boundary `j` holds
/// the state the forward chain would have at `j`. `applied_mask` is the
/// n-bit correction applied to the symbol crossed to reach this node, and
/// `correction_rank` its index in the allowed-correction list.
#[derive(Debug, Clone, Copy)]
pub struct TreeNode {
    pub state: u64,
    pub weight: f64,
    pub parent: u32,
    pub boundary: u16,
    pub applied_mask: u16,
    pub correction_rank: u16,
    pub direction: Direction,
}

#[derive(Debug, Default)]
pub struct NodeArena {
    nodes: Vec<TreeNode>,
}

impl NodeArena {
    pub fn new() -> Self {
        NodeArena { nodes: Vec::new() }
    }

    #[inline]
    pub fn push(&mut self, node: TreeNode) -> u32 {
        let id = self.nodes.len() as u32;
        self.nodes.push(node);
        id
    }

    #[inline]
    pub fn get(&self, id: u32) -> &TreeNode {
        &self.nodes[id as usize]
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Corrections along the path from `leaf` back to its root, as
    /// (symbol index, mask) pairs. A forward node at boundary `b` corrected
    /// symbol `b - 1`; a backward node at boundary `b` corrected symbol `b`.
    pub fn path_corrections(&self, leaf: u32) -> Vec<(usize, u16)> {
        let mut out = Vec::new();
        let mut id = leaf;
        loop {
            let node = self.get(id);
            if node.parent == NO_PARENT {
                break;
            }
            let symbol_index = match node.direction {
                Direction::Forward => node.boundary as usize - 1,
                Direction::Backward => node.boundary as usize,
            };
            out.push((symbol_index, node.applied_mask));
            id = node.parent;
        }
        out
    }
}
