# Autogenerated by nbdev

d = { 'settings': { 'branch': 'main',
                'doc_baseurl': '/young_heinz-sdk',
                'doc_host': 'https://d3group.github.io',
                'git_url': 'https://github.com/d3group/young_heinz-sdk',
                'lib_path': 'young_heinz_sdk'},
  'syms': {
            'young_heinz_sdk.core': {
                'young_heinz_sdk.core.DomainError': ('core.html#domainerror', 'young_heinz_sdk/core.py'),
                'young_heinz_sdk.core.NumericalError': ('core.html#numericalerror', 'young_heinz_sdk/core.py'),
                'young_heinz_sdk.core.UsageError': ('core.html#usageerror', 'young_heinz_sdk/core.py'),
                'young_heinz_sdk.core.ProbeDomainError': ('core.html#probedomainerror', 'young_heinz_sdk/core.py'),
                'young_heinz_sdk.core.Variant': ('core.html#variant', 'young_heinz_sdk/core.py'),
                'young_heinz_sdk.core.link_slack': ('core.html#link_slack', 'young_heinz_sdk/core.py'),
                'young_heinz_sdk.core.link_holds': ('core.html#link_holds', 'young_heinz_sdk/core.py'),
                'young_heinz_sdk.core.Verdict': ('core.html#verdict', 'young_heinz_sdk/core.py'),
                'young_heinz_sdk.core.make_verdict': ('core.html#make_verdict', 'young_heinz_sdk/core.py'),
                'young_heinz_sdk.core.inputs_digest': ('core.html#inputs_digest', 'young_heinz_sdk/core.py'),
                'young_heinz_sdk.core.signed_pow': ('core.html#signed_pow', 'young_heinz_sdk/core.py'),
            },
            'young_heinz_sdk.scalar_kernel': {
                'young_heinz_sdk.scalar_kernel.NuContext': ('scalar_kernel.html#nucontext', 'young_heinz_sdk/scalar_kernel.py'),
                'young_heinz_sdk.scalar_kernel.nu_context': ('scalar_kernel.html#nu_context', 'young_heinz_sdk/scalar_kernel.py'),
                'young_heinz_sdk.scalar_kernel.Chain': ('scalar_kernel.html#chain', 'young_heinz_sdk/scalar_kernel.py'),
                'young_heinz_sdk.scalar_kernel.s1': ('scalar_kernel.html#s1', 'young_heinz_sdk/scalar_kernel.py'),
                'young_heinz_sdk.scalar_kernel.s1_refining': ('scalar_kernel.html#s1_refining', 'young_heinz_sdk/scalar_kernel.py'),
                'young_heinz_sdk.scalar_kernel.young_refined': ('scalar_kernel.html#young_refined', 'young_heinz_sdk/scalar_kernel.py'),
                'young_heinz_sdk.scalar_kernel.young_squared': ('scalar_kernel.html#young_squared', 'young_heinz_sdk/scalar_kernel.py'),
                'young_heinz_sdk.scalar_kernel.quadratic_gap_bounds': ('scalar_kernel.html#quadratic_gap_bounds', 'young_heinz_sdk/scalar_kernel.py'),
                'young_heinz_sdk.scalar_kernel.heinz_mean': ('scalar_kernel.html#heinz_mean', 'young_heinz_sdk/scalar_kernel.py'),
                'young_heinz_sdk.scalar_kernel.ProbeKind': ('scalar_kernel.html#probekind', 'young_heinz_sdk/scalar_kernel.py'),
                'young_heinz_sdk.scalar_kernel.ConvexProbe': ('scalar_kernel.html#convexprobe', 'young_heinz_sdk/scalar_kernel.py'),
                'young_heinz_sdk.scalar_kernel.default_probes': ('scalar_kernel.html#default_probes', 'young_heinz_sdk/scalar_kernel.py'),
                'young_heinz_sdk.scalar_kernel.verify_probe': ('scalar_kernel.html#verify_probe', 'young_heinz_sdk/scalar_kernel.py'),
                'young_heinz_sdk.scalar_kernel.Sandwich': ('scalar_kernel.html#sandwich', 'young_heinz_sdk/scalar_kernel.py'),
                'young_heinz_sdk.scalar_kernel.sandwich_hypotheses': ('scalar_kernel.html#sandwich_hypotheses', 'young_heinz_sdk/scalar_kernel.py'),
                'young_heinz_sdk.scalar_kernel.phi_sandwich': ('scalar_kernel.html#phi_sandwich', 'young_heinz_sdk/scalar_kernel.py'),
                'young_heinz_sdk.scalar_kernel.heinz_sandwich': ('scalar_kernel.html#heinz_sandwich', 'young_heinz_sdk/scalar_kernel.py'),
                'young_heinz_sdk.scalar_kernel.lemma312_gap': ('scalar_kernel.html#lemma312_gap', 'young_heinz_sdk/scalar_kernel.py'),
                'young_heinz_sdk.scalar_kernel.squared_young_refined': ('scalar_kernel.html#squared_young_refined', 'young_heinz_sdk/scalar_kernel.py'),
            },
            'young_heinz_sdk.matrix_core': {
                'young_heinz_sdk.matrix_core.as_matrix': ('matrix_core.html#as_matrix', 'young_heinz_sdk/matrix_core.py'),
                'young_heinz_sdk.matrix_core.SpectralDecomp': ('matrix_core.html#spectraldecomp', 'young_heinz_sdk/matrix_core.py'),
                'young_heinz_sdk.matrix_core.SingularValueSet': ('matrix_core.html#singularvalueset', 'young_heinz_sdk/matrix_core.py'),
                'young_heinz_sdk.matrix_core.eig_hermitian': ('matrix_core.html#eig_hermitian', 'young_heinz_sdk/matrix_core.py'),
                'young_heinz_sdk.matrix_core.HermitianPSD': ('matrix_core.html#hermitianpsd', 'young_heinz_sdk/matrix_core.py'),
                'young_heinz_sdk.matrix_core.frac_power': ('matrix_core.html#frac_power', 'young_heinz_sdk/matrix_core.py'),
                'young_heinz_sdk.matrix_core.singular_values': ('matrix_core.html#singular_values', 'young_heinz_sdk/matrix_core.py'),
                'young_heinz_sdk.matrix_core.det': ('matrix_core.html#det', 'young_heinz_sdk/matrix_core.py'),
                'young_heinz_sdk.matrix_core.trace': ('matrix_core.html#trace', 'young_heinz_sdk/matrix_core.py'),
                'young_heinz_sdk.matrix_core.adjoint': ('matrix_core.html#adjoint', 'young_heinz_sdk/matrix_core.py'),
                'young_heinz_sdk.matrix_core.matmul': ('matrix_core.html#matmul', 'young_heinz_sdk/matrix_core.py'),
                'young_heinz_sdk.matrix_core.add': ('matrix_core.html#add', 'young_heinz_sdk/matrix_core.py'),
                'young_heinz_sdk.matrix_core.sub': ('matrix_core.html#sub', 'young_heinz_sdk/matrix_core.py'),
                'young_heinz_sdk.matrix_core.scale': ('matrix_core.html#scale', 'young_heinz_sdk/matrix_core.py'),
            },
            'young_heinz_sdk.norms': {
                'young_heinz_sdk.norms.NormKind': ('norms.html#normkind', 'young_heinz_sdk/norms.py'),
                'young_heinz_sdk.norms.NormSpec': ('norms.html#normspec', 'young_heinz_sdk/norms.py'),
                'young_heinz_sdk.norms.hs_norm_sq': ('norms.html#hs_norm_sq', 'young_heinz_sdk/norms.py'),
                'young_heinz_sdk.norms.norm': ('norms.html#norm', 'young_heinz_sdk/norms.py'),
                'young_heinz_sdk.norms.all_default_specs': ('norms.html#all_default_specs', 'young_heinz_sdk/norms.py'),
                'young_heinz_sdk.norms.applicable_specs': ('norms.html#applicable_specs', 'young_heinz_sdk/norms.py'),
            },
            'young_heinz_sdk.sampling': {
                'young_heinz_sdk.sampling.default_nu_grid': ('sampling.html#default_nu_grid', 'young_heinz_sdk/sampling.py'),
                'young_heinz_sdk.sampling.parse_nu_grid': ('sampling.html#parse_nu_grid', 'young_heinz_sdk/sampling.py'),
                'young_heinz_sdk.sampling.SampleConfig': ('sampling.html#sampleconfig', 'young_heinz_sdk/sampling.py'),
                'young_heinz_sdk.sampling.load_config_file': ('sampling.html#load_config_file', 'young_heinz_sdk/sampling.py'),
                'young_heinz_sdk.sampling.mix': ('sampling.html#mix', 'young_heinz_sdk/sampling.py'),
                'young_heinz_sdk.sampling.generator': ('sampling.html#generator', 'young_heinz_sdk/sampling.py'),
                'young_heinz_sdk.sampling.gen_scalar': ('sampling.html#gen_scalar', 'young_heinz_sdk/sampling.py'),
                'young_heinz_sdk.sampling.gen_scalars': ('sampling.html#gen_scalars', 'young_heinz_sdk/sampling.py'),
                'young_heinz_sdk.sampling.gen_matrix': ('sampling.html#gen_matrix', 'young_heinz_sdk/sampling.py'),
                'young_heinz_sdk.sampling.gen_psd': ('sampling.html#gen_psd', 'young_heinz_sdk/sampling.py'),
                'young_heinz_sdk.sampling.MatrixSample': ('sampling.html#matrixsample', 'young_heinz_sdk/sampling.py'),
                'young_heinz_sdk.sampling.matrix_samples': ('sampling.html#matrix_samples', 'young_heinz_sdk/sampling.py'),
                'young_heinz_sdk.sampling.seeded_matrix_samples': ('sampling.html#seeded_matrix_samples', 'young_heinz_sdk/sampling.py'),
                'young_heinz_sdk.sampling.tight_scalar_cases': ('sampling.html#tight_scalar_cases', 'young_heinz_sdk/sampling.py'),
                'young_heinz_sdk.sampling.scalar_samples': ('sampling.html#scalar_samples', 'young_heinz_sdk/sampling.py'),
                'young_heinz_sdk.sampling.log_grid_pairs': ('sampling.html#log_grid_pairs', 'young_heinz_sdk/sampling.py'),
                'young_heinz_sdk.sampling.structured_cases': ('sampling.html#structured_cases', 'young_heinz_sdk/sampling.py'),
            },
            'young_heinz_sdk.inequality_suite': {
                'young_heinz_sdk.inequality_suite.YoungForm': ('inequality_suite.html#youngform', 'young_heinz_sdk/inequality_suite.py'),
                'young_heinz_sdk.inequality_suite.check_sv_young': ('inequality_suite.html#check_sv_young', 'young_heinz_sdk/inequality_suite.py'),
                'young_heinz_sdk.inequality_suite.check_classical_young': ('inequality_suite.html#check_classical_young', 'young_heinz_sdk/inequality_suite.py'),
                'young_heinz_sdk.inequality_suite.check_sababheh': ('inequality_suite.html#check_sababheh', 'young_heinz_sdk/inequality_suite.py'),
                'young_heinz_sdk.inequality_suite.check_zhaowu_hs': ('inequality_suite.html#check_zhaowu_hs', 'young_heinz_sdk/inequality_suite.py'),
                'young_heinz_sdk.inequality_suite.check_prop38': ('inequality_suite.html#check_prop38', 'young_heinz_sdk/inequality_suite.py'),
                'young_heinz_sdk.inequality_suite.check_thm39': ('inequality_suite.html#check_thm39', 'young_heinz_sdk/inequality_suite.py'),
                'young_heinz_sdk.inequality_suite.check_example311': ('inequality_suite.html#check_example311', 'young_heinz_sdk/inequality_suite.py'),
                'young_heinz_sdk.inequality_suite.check_thm313': ('inequality_suite.html#check_thm313', 'young_heinz_sdk/inequality_suite.py'),
                'young_heinz_sdk.inequality_suite.check_thm34': ('inequality_suite.html#check_thm34', 'young_heinz_sdk/inequality_suite.py'),
                'young_heinz_sdk.inequality_suite.check_thm35': ('inequality_suite.html#check_thm35', 'young_heinz_sdk/inequality_suite.py'),
                'young_heinz_sdk.inequality_suite.check_remark37_det': ('inequality_suite.html#check_remark37_det', 'young_heinz_sdk/inequality_suite.py'),
                'young_heinz_sdk.inequality_suite.check_thm36': ('inequality_suite.html#check_thm36', 'young_heinz_sdk/inequality_suite.py'),
                'young_heinz_sdk.inequality_suite.check_remark37_norm': ('inequality_suite.html#check_remark37_norm', 'young_heinz_sdk/inequality_suite.py'),
                'young_heinz_sdk.inequality_suite.check_prop314': ('inequality_suite.html#check_prop314', 'young_heinz_sdk/inequality_suite.py'),
                'young_heinz_sdk.inequality_suite.check_lemma31': ('inequality_suite.html#check_lemma31', 'young_heinz_sdk/inequality_suite.py'),
                'young_heinz_sdk.inequality_suite.check_lemma32': ('inequality_suite.html#check_lemma32', 'young_heinz_sdk/inequality_suite.py'),
                'young_heinz_sdk.inequality_suite.check_lemma32_trace': ('inequality_suite.html#check_lemma32_trace', 'young_heinz_sdk/inequality_suite.py'),
                'young_heinz_sdk.inequality_suite.check_lemma33': ('inequality_suite.html#check_lemma33', 'young_heinz_sdk/inequality_suite.py'),
                'young_heinz_sdk.inequality_suite.check_bhatia_kittaneh': ('inequality_suite.html#check_bhatia_kittaneh', 'young_heinz_sdk/inequality_suite.py'),
                'young_heinz_sdk.inequality_suite.HSIdentity': ('inequality_suite.html#hsidentity', 'young_heinz_sdk/inequality_suite.py'),
                'young_heinz_sdk.inequality_suite.check_hs_identity': ('inequality_suite.html#check_hs_identity', 'young_heinz_sdk/inequality_suite.py'),
                'young_heinz_sdk.inequality_suite.check_hs_identities': ('inequality_suite.html#check_hs_identities', 'young_heinz_sdk/inequality_suite.py'),
                'young_heinz_sdk.inequality_suite.check_scalar': ('inequality_suite.html#check_scalar', 'young_heinz_sdk/inequality_suite.py'),
                'young_heinz_sdk.inequality_suite.CheckSpec': ('inequality_suite.html#checkspec', 'young_heinz_sdk/inequality_suite.py'),
                'young_heinz_sdk.inequality_suite.param_label': ('inequality_suite.html#param_label', 'young_heinz_sdk/inequality_suite.py'),
                'young_heinz_sdk.inequality_suite.get_check': ('inequality_suite.html#get_check', 'young_heinz_sdk/inequality_suite.py'),
                'young_heinz_sdk.inequality_suite.Outcome': ('inequality_suite.html#outcome', 'young_heinz_sdk/inequality_suite.py'),
                'young_heinz_sdk.inequality_suite.iter_outcomes': ('inequality_suite.html#iter_outcomes', 'young_heinz_sdk/inequality_suite.py'),
                'young_heinz_sdk.inequality_suite.evaluate_inputs': ('inequality_suite.html#evaluate_inputs', 'young_heinz_sdk/inequality_suite.py'),
            },
            'young_heinz_sdk.reporting': {
                'young_heinz_sdk.reporting.encode_matrix': ('reporting.html#encode_matrix', 'young_heinz_sdk/reporting.py'),
                'young_heinz_sdk.reporting.decode_matrix': ('reporting.html#decode_matrix', 'young_heinz_sdk/reporting.py'),
                'young_heinz_sdk.reporting.encode_inputs': ('reporting.html#encode_inputs', 'young_heinz_sdk/reporting.py'),
                'young_heinz_sdk.reporting.decode_inputs': ('reporting.html#decode_inputs', 'young_heinz_sdk/reporting.py'),
                'young_heinz_sdk.reporting.json_safe': ('reporting.html#json_safe', 'young_heinz_sdk/reporting.py'),
                'young_heinz_sdk.reporting.ReportEntry': ('reporting.html#reportentry', 'young_heinz_sdk/reporting.py'),
                'young_heinz_sdk.reporting.CurvePoint': ('reporting.html#curvepoint', 'young_heinz_sdk/reporting.py'),
                'young_heinz_sdk.reporting.AuditFinding': ('reporting.html#auditfinding', 'young_heinz_sdk/reporting.py'),
                'young_heinz_sdk.reporting.Report': ('reporting.html#report', 'young_heinz_sdk/reporting.py'),
                'young_heinz_sdk.reporting.new_report': ('reporting.html#new_report', 'young_heinz_sdk/reporting.py'),
                'young_heinz_sdk.reporting.summarize': ('reporting.html#summarize', 'young_heinz_sdk/reporting.py'),
                'young_heinz_sdk.reporting.curve': ('reporting.html#curve', 'young_heinz_sdk/reporting.py'),
                'young_heinz_sdk.reporting.audit_finding': ('reporting.html#audit_finding', 'young_heinz_sdk/reporting.py'),
            },
            'young_heinz_sdk.custom_datasets': {
                'young_heinz_sdk.custom_datasets.ReportDataset': ('custom_datasets.html#reportdataset', 'young_heinz_sdk/custom_datasets.py'),
                'young_heinz_sdk.custom_datasets.VerdictDataset': ('custom_datasets.html#verdictdataset', 'young_heinz_sdk/custom_datasets.py'),
                'young_heinz_sdk.custom_datasets.MatrixInputsDataset': ('custom_datasets.html#matrixinputsdataset', 'young_heinz_sdk/custom_datasets.py'),
            },
            'young_heinz_sdk.harness_cli': {
                'young_heinz_sdk.harness_cli.build_parser': ('harness_cli.html#build_parser', 'young_heinz_sdk/harness_cli.py'),
                'young_heinz_sdk.harness_cli.config_from_args': ('harness_cli.html#config_from_args', 'young_heinz_sdk/harness_cli.py'),
                'young_heinz_sdk.harness_cli.cmd_suite': ('harness_cli.html#cmd_suite', 'young_heinz_sdk/harness_cli.py'),
                'young_heinz_sdk.harness_cli.cmd_check': ('harness_cli.html#cmd_check', 'young_heinz_sdk/harness_cli.py'),
                'young_heinz_sdk.harness_cli.cmd_sweep': ('harness_cli.html#cmd_sweep', 'young_heinz_sdk/harness_cli.py'),
                'young_heinz_sdk.harness_cli.cmd_audit': ('harness_cli.html#cmd_audit', 'young_heinz_sdk/harness_cli.py'),
                'young_heinz_sdk.harness_cli.pinned_violations': ('harness_cli.html#pinned_violations', 'young_heinz_sdk/harness_cli.py'),
                'young_heinz_sdk.harness_cli.write_report': ('harness_cli.html#write_report', 'young_heinz_sdk/harness_cli.py'),
                'young_heinz_sdk.harness_cli.main': ('harness_cli.html#main', 'young_heinz_sdk/harness_cli.py'),
            },
  }}
