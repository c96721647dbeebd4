"""Walk through the H-function machinery on small reference links.

Builds the two-variable Alexander data of several two-bridge operator
links, evaluates the H-function by inclusion-exclusion, and prints the
tables together with the derived R_t values and the width N.

Run:  python3 demos/01_h_function_tables.py
"""

from lsat import (
    HFunction,
    HalfInt,
    hf_table_tsv,
    r_of_t,
    twobridge_data,
    unlink_data,
    validate,
    width,
)


def show(title: str, data) -> None:
    h = HFunction(data)
    print(f"== {title} (linking {h.linking}) ==")
    print(hf_table_tsv(h, width(data) + 2))
    half_l = HalfInt(h.linking)
    print(f"width N        = {width(data)}")
    print(f"R at winding/2 = {r_of_t(h, half_l)}")
    report = validate(h)
    print(f"validation     = {'ok' if report.ok else report.failures}")
    print()


def main() -> None:
    show("two-component unlink", unlink_data())
    show("positive Hopf link, pattern (3,1)", twobridge_data(3, 1))
    show("Whitehead pattern (3,3)", twobridge_data(3, 3))
    show("Mazur pattern (5,3)", twobridge_data(5, 3))

    # The closed R-value formulas for the two-bridge family: at the
    # center column R = (r+q-2)/4 and one column off R = (r+q-6)/4.
    print("== closed R formulas across the family ==")
    for r in (3, 5, 7, 9):
        for q in range(3, r + 1, 2):
            h = HFunction(twobridge_data(r, q))
            half_l = HalfInt(h.linking)
            center = r_of_t(h, half_l)
            off = r_of_t(h, half_l - 1)
            print(
                f"(r,q)=({r},{q})  l={h.linking}  "
                f"R_center={center} (expect {(r + q - 2)}/4)  "
                f"R_minus={off} (expect {(r + q - 6)}/4)"
            )


if __name__ == "__main__":
    main()
