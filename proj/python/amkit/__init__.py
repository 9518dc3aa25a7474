"""Angular-momentum constructions of qudit gates and hypergraph states."""

from ._amkit import (
    Multihypergraph,
    am_hypergraph_state,
    ccz_target,
    ccz_two_body,
    coupling_from_qubits,
    compress_symmetric,
    controlled,
    dft_network,
    dicke_isometry,
    hard_ccz_decomposition,
    hard_cz_target,
    hypergraph_state,
    hypergraph_state_hamiltonian,
    local_gate,
    mc_phase,
    optical_ccz,
    optical_hypergraph3,
    parse_hypergraph,
    pegg_barnett,
    run_cli,
    run_suite,
    slocc_certificate,
    spin_ops,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
