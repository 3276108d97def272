use pyo3::ffi::c_str;
use pyo3::prelude::*;

#[test]
fn module_round_trip() {
    Python::attach(|py| {
        let module = pyo3::wrap_pymodule!(fsl::fsl)(py);
        py.import("sys")
            .unwrap()
            .getattr("modules")
            .unwrap()
            .set_item("fsl", module)
            .unwrap();
        let code = c_str!(
            r#"
import fsl
a2 = fsl.LieType("A", 2)
assert a2.string_points([1, 0]) == [[0, 0, 0], [0, 0, 1], [1, 0, 1]]
assert a2.fflv_points([1, 1]).__len__() == 8
assert fsl.LieType("C", 2).check_main([0, 1]).passed
assert issubclass(fsl.GateError, RuntimeError)
try:
    fsl.LieType("A", 0)
    raise AssertionError("rank 0 accepted")
except ValueError:
    pass
"#
        );
        py.run(code, None, None).unwrap();
    });
}
