"""Zipper-based small-step semantics for a tiny imperative language,
compilation of programs to automata labeled by program points, and
silent-transition closure with an executable simulation witness."""

from .ast import (FALSE, NULL, TRUE, Assign, Bool, Cond, Expr, Lit, Null,
                  ParseError, Seq, Skip, Stmt, Value, Var, While,
                  parse_program, print_program, subterm_count)
from .zipper import (TOP, CondElse, CondThen, Cursor, Location, Path, SeqLeft,
                     SeqRight, Top, WhileBody, advance, all_locations,
                     cursors_of, reconstruct, reconstruct_loc, render_path)
from .semantics import (STEP_LIMIT, STUCK, TERMINATED, Config, Trace,
                        eval_expr, is_terminal, run_trace, sem_step)
from .automaton import (SILENT, Action, AssignAction, Automaton, Edge, Silent,
                        SimulationReport, action_effect, action_of, aut_step,
                        check_simulation, edges_closed, edges_of,
                        edges_of_nodes, is_regular, nodes_closed,
                        program_automaton, step_image, step_image_closed)
from .tauclose import (NodeSet, TauSimReport, check_tau_simulation,
                       close_automaton, closed_edges, closed_init,
                       closed_nodes, closure_bfs, closure_step, edge_actions,
                       tau_closure)

__version__ = "0.1.0"
