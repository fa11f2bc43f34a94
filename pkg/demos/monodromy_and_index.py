"""Local monodromy matrices, the global generators, and the index of the group they generate."""

from icosamono import fpgroups, monodromy, surfaces

for model in ("sigma", "pi"):
    for kind in (surfaces.TRUNCATION, surfaces.EDGE):
        vs = monodromy.vanishing_set(model, kind)
        print(f"{model} {kind}: {len(vs)} vanishing classes, matrix {monodromy.local_monodromy(model, kind)}")

gens = monodromy.global_generators()
for g in gens:
    print("generator", g)
print("product of the generators:", monodromy.rho_zero_inverse())

table = fpgroups.todd_coxeter(fpgroups.sl2o_presentation(), fpgroups.MONODROMY_WORDS)
chain = fpgroups.certify_index_two(table=table)
print("index in SL2(O):", table.index)
print("index of SL2(O_o) in SL2(O):", chain.index_oo_in_o)
print("index in SL2(O_o):", chain.index_in_sl2oo, "with fibres", chain.fibre_sizes)
