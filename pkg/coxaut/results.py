"""Result documents written by the coxaut commands.
"""
import yaml

from ._version import __version__

MACHINE_MARKER = "--- machine ---"


class ResultDocument(object):
    """
    Text report plus a machine readable section.

    Attributes
    ----------
    command: `str`
    input_hash: `str`
    sections: `list`
       (title, text) pairs in output order.
    outputs: `dict`
       Plain python data for the machine section.
    budget: `dict`
       Budget usage counters.
    """

    def __init__(self, command, input_hash):
        self.command = command
        self.input_hash = input_hash
        self.version = __version__
        self.sections = []
        self.outputs = {}
        self.budget = {}

    def add_section(self, title, text):
        """Append a text section."""
        if isinstance(text, (list, tuple)):
            text = "\n".join(str(t) for t in text)
        self.sections.append((title, str(text)))

    def set_output(self, key, value):
        self.outputs[key] = value

    def machine(self):
        return {'command': self.command,
                'input_hash': self.input_hash,
                'version': self.version,
                'outputs': self.outputs,
                'budget': self.budget}

    def machine_yaml(self):
        return yaml.safe_dump(self.machine(), sort_keys=True, default_flow_style=False)

    def render(self):
        """
        The full document as text.

        Returns
        -------
        text: `str`
        """
        lines = ["coxaut %s: %s" % (self.version, self.command),
                 "input: %s" % (self.input_hash), ""]
        for title, text in self.sections:
            lines.append("== %s ==" % (title))
            lines.append(text)
            lines.append("")
        lines.append(MACHINE_MARKER)
        return "\n".join(lines) + "\n" + self.machine_yaml()

    def write_machine(self, filename):
        """Write only the machine section as yaml."""
        with open(filename, 'w') as f:
            f.write(self.machine_yaml())

    @staticmethod
    def read_machine(text):
        """Parse the machine section back from a rendered document or a machine file."""
        if MACHINE_MARKER in text:
            text = text.split(MACHINE_MARKER, 1)[1]
        return yaml.safe_load(text)
