import time


class SearchStats:
    """
    Stats of a single search (automorphism backtracking or exact labeling oracle).
    """

    def __init__(self):
        """
        Create a new stats block with all counters initialized to zero.
        """
        self.elapsed_process_time = None
        self.elapsed_real_time = None
        self.nodes = 0
        self.leaves = 0
        self.automorphisms_found = 0
        self.labelings_tested = 0
        self._start_process_time = None
        self._start_real_time = None

    def start(self):
        """
        Start measuring process and real time.
        """
        self._start_process_time = time.process_time()
        self._start_real_time = time.perf_counter()

    def stop(self):
        """
        Stop measuring; elapsed times accumulate over repeated start/stop pairs.
        """
        if self._start_process_time is None:
            return
        process_time = time.process_time() - self._start_process_time
        real_time = time.perf_counter() - self._start_real_time
        self.elapsed_process_time = (self.elapsed_process_time or 0.0) + process_time
        self.elapsed_real_time = (self.elapsed_real_time or 0.0) + real_time
        self._start_process_time = None
        self._start_real_time = None

    def merge(self, other):
        """
        Add the counters of another stats block into this one.
        """
        self.nodes += other.nodes
        self.leaves += other.leaves
        self.automorphisms_found += other.automorphisms_found
        self.labelings_tested += other.labelings_tested
        for name in ("elapsed_process_time", "elapsed_real_time"):
            theirs = getattr(other, name)
            if theirs is not None:
                setattr(self, name, (getattr(self, name) or 0.0) + theirs)

    def as_dict(self):
        """
        Get the counters as a plain dictionary (for JSON reports).
        """
        return {
            "nodes": self.nodes,
            "leaves": self.leaves,
            "automorphisms_found": self.automorphisms_found,
            "labelings_tested": self.labelings_tested,
            "elapsed_process_time": self.elapsed_process_time,
            "elapsed_real_time": self.elapsed_real_time,
        }
