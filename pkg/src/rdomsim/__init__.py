"""Distributed distance-r dominating set on high-girth sparse graphs.

A deterministic CONGEST-style simulator, the greedy selection algorithm and
its companion programs, exact sequential oracles, and the Voronoi-cell
analysis that certifies the approximation bound instance by instance.
"""

from .corpus import builtin_corpus
from .experiments import (CSV_HEADER, ExperimentError, ExperimentResult,
                          build_instance, default_f_r, run_experiment,
                          run_suite)
from .generators import (TightnessGraph, TightnessParams, gen_complete,
                         gen_cycle, gen_path, gen_random_tree, gen_tightness,
                         subdivide, tightness_dominating_set)
from .graphs import (INFINITE, Graph, GraphError, ball, bfs_distances,
                     build_graph, connected_components, girth,
                     neighborhood_size_oracle, read_graph, write_graph)
from .oracles import (OptimumUnknown, exact_min_rds, greedy_rds,
                      is_independent, is_r_dominating)
from .programs import (RmdsOutput, SelectionMap, count_neighborhood_program,
                       cycle_is_program, rmds_program, rmds_round_budget,
                       selection_oracle)
from .simulator import (BackBitsetMsg, BitBudgetExceeded, BudgetExceeded,
                        CandidateMsg, CountMsg, FloodMsg, NodeProgram,
                        ProgramFault, SimulationReport, StepResult, id_bits,
                        message_bits, run_simulation)
from .voronoi import (ApproxReport, BoundaryForest, LemmaFlags,
                      NotDominatingError, SelectionSplit,
                      VoronoiDecomposition, approx_report, boundary_forest,
                      check_structural_lemmas, split_selection,
                      voronoi_decompose)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
