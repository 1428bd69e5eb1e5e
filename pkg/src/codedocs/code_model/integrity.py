"""
Whole-model consistency checks: containment is a tree and resolved relations point at real entities.
"""


def check_model(project):
    """returns a list of human-readable problems; empty when the model is consistent"""
    problems = []
    classes = {}
    package_names = set()
    for package in project.packages:
        if package.qualified_name in package_names:
            problems.append(f'package {package.qualified_name} appears twice')
        package_names.add(package.qualified_name)
        simple_names = set()
        for entity in package.classes:
            if entity.name in simple_names:
                problems.append(f'class {entity.name} appears twice in package {package.qualified_name}')
            simple_names.add(entity.name)
            if entity.qualified_name in classes:
                problems.append(f'class {entity.qualified_name} has more than one package parent')
            classes[entity.qualified_name] = entity
            if entity.is_interface and entity.superclass is not None:
                problems.append(f'interface {entity.qualified_name} has a superclass')

    for entity in classes.values():
        supertypes = list(entity.super_interfaces)
        if entity.superclass is not None:
            supertypes.append(entity.superclass)
        for ref in supertypes:
            if ref.is_internal and ref.name not in classes:
                problems.append(f'{entity.qualified_name} extends missing class {ref.name}')
        for method in entity.methods:
            orders = [p.order for p in method.parameters]
            if orders != list(range(len(orders))):
                problems.append(f'{entity.qualified_name}#{method.signature} has parameter orders {orders}')
            for access in method.accesses:
                if access.resolved:
                    target = classes.get(access.declaring_class.name)
                    if target is None or target.find_attribute(access.accessed_attribute_name) is None:
                        problems.append(f'{entity.qualified_name}#{method.signature} accesses missing attribute '
                                        f'{access.declaring_class.name}#{access.accessed_attribute_name}')
            for invocation in method.invocations:
                if invocation.resolved:
                    target = classes.get(invocation.declaring_class.name)
                    if target is None or not target.find_methods(invocation.invoked_method_name):
                        problems.append(f'{entity.qualified_name}#{method.signature} invokes missing method '
                                        f'{invocation.declaring_class.name}#{invocation.invoked_method_name}')
    return problems
