from setuptools import setup

setup(name='alignedlinkpred',
      version='0.0',
      description='Link prediction for new users across aligned heterogeneous social networks, with personalized sampling of old users.',
      packages=['alignedlinkpred','alignedlinkpred/networks','alignedlinkpred/features','alignedlinkpred/sampling',
                'alignedlinkpred/learn','alignedlinkpred/methods','alignedlinkpred/experiments'],
      install_requires=['numpy','scipy','scikit-learn','networkx','pandas','joblib','tqdm'],
      extras_require={'test': ['pytest','hypothesis']},
      entry_points={'console_scripts': ['alignedlinkpred=alignedlinkpred.cli:main']},
      zip_safe=False)
