"""The shipped corpus: ring expressions covering every constructor, orders 1-4096."""

CORPUS = (
    # Z_n
    "Z1", "Z2", "Z3", "Z4", "Z5", "Z6", "Z8", "Z9", "Z12", "Z16",
    # table rings
    "table(F4)",
    # direct products
    "Z2xZ2", "Z2xZ3", "Z2xZ4", "Z2xT2(Z2)",
    # full matrix rings
    "M2(Z2)", "M2(Z3)", "M2(Z4)", "M2(table(F4))",
    # triangular rings
    "T2(Z2)", "T2(Z3)", "T2(Z4)", "T3(Z2)", "T2(Z16)",
    # corners: E_11 of M2(Z2), E_22 of T2(Z2), E_11 of T3(Z2)
    "corner(M2(Z2),8)", "corner(T2(Z2),1)", "corner(T3(Z2),32)",
    # quotients
    "quot(Z8,4)", "quot(Z12,2)", "quot(M2(Z4),130)", "quot(T2(Z4),2)",
    # group rings
    "GR(Z2,C2)", "GR(Z2,C3)", "GR(Z3,C2)", "GR(Z2,C2xC2)", "GR(Z4,C2)",
    "GR(Z2,gtable(S3))",
    # generalized matrix rings K_s
    "Ks(Z2,0)", "Ks(Z2,1)", "Ks(Z3,0)", "Ks(Z4,2)",
    # formal triangular rings
    "FT(Z2,Z2,R)", "FT(Z2,Z4,R)", "FT(Z4,Z2,S)", "FT(Z3,Z2,0)",
)
