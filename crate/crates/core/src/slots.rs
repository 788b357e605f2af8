//! Indexed storage the in-place kernels read and write through.

/// A fixed-length array of ring elements.
///
/// Kernels only ever see this interface, so a plain slice and an
/// access-recording [`crate::instrumentation::AuditBuffer`] are
/// interchangeable.
pub trait Slots<E: Copy> {
    fn len(&self) -> usize;

    fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn get(&mut self, i: usize) -> E;

    fn set(&mut self, i: usize, value: E);
}

impl<E: Copy> Slots<E> for [E] {
    #[inline]
    fn len(&self) -> usize {
        <[E]>::len(self)
    }

    #[inline]
    fn get(&mut self, i: usize) -> E {
        self[i]
    }

    #[inline]
    fn set(&mut self, i: usize, value: E) {
        self[i] = value;
    }
}

impl<E: Copy> Slots<E> for Vec<E> {
    #[inline]
    fn len(&self) -> usize {
        Vec::len(self)
    }

    #[inline]
    fn get(&mut self, i: usize) -> E {
        self[i]
    }

    #[inline]
    fn set(&mut self, i: usize, value: E) {
        self[i] = value;
    }
}
