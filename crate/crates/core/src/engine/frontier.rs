use std::cmp::Ordering;

/// Binary min-heap ordered by a comparator supplied at each call.
///
/// `std::collections::BinaryHeap` needs `Ord` on the items, but the order
/// here belongs to the semigroup instance, not to the element type.
#[derive(Debug, Clone)]
pub(crate) struct Frontier<T> {
    items: Vec<T>,
}

impl<T> Frontier<T> {
    pub(crate) fn new() -> Self {
        Frontier { items: Vec::new() }
    }

    pub(crate) fn len(&self) -> usize {
        self.items.len()
    }

    pub(crate) fn peek(&self) -> Option<&T> {
        self.items.first()
    }

    pub(crate) fn push(&mut self, item: T, cmp: impl Fn(&T, &T) -> Ordering) {
        self.items.push(item);
        let mut i = self.items.len() - 1;
        while i > 0 {
            let parent = (i - 1) / 2;
            if cmp(&self.items[i], &self.items[parent]) == Ordering::Less {
                self.items.swap(i, parent);
                i = parent;
            } else {
                break;
            }
        }
    }

    pub(crate) fn pop(&mut self, cmp: impl Fn(&T, &T) -> Ordering) -> Option<T> {
        if self.items.is_empty() {
            return None;
        }
        let top = self.items.swap_remove(0);
        let n = self.items.len();
        let mut i = 0;
        loop {
            let (l, r) = (2 * i + 1, 2 * i + 2);
            let mut smallest = i;
            if l < n && cmp(&self.items[l], &self.items[smallest]) == Ordering::Less {
                smallest = l;
            }
            if r < n && cmp(&self.items[r], &self.items[smallest]) == Ordering::Less {
                smallest = r;
            }
            if smallest == i {
                break;
            }
            self.items.swap(i, smallest);
            i = smallest;
        }
        Some(top)
    }
}
